"""Exact computations with Frobenius algebras: structure maps, cohomology,
Yang-Baxter solutions and first-order deformations."""

__version__ = "0.1.0"
