import itertools
import random
from fractions import Fraction

import pytest
import sympy

from frobcoh.errors import ArityMismatch
from frobcoh.scalars import GF, QQ
from frobcoh.tensorlin import (
    LinMap, Subspace, basis_index, basis_tuple, chain, compose, invert, kernel, rank,
    solve_affine, tensor, transposition,
)


def random_map(rng, F, d, m, n, density=0.7):
    flat = {k: F.random(rng) for k in range(d ** (m + n)) if rng.random() < density}
    return LinMap.from_flat(F, d, m, n, flat)


def to_sympy(f):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in f.to_dense()])


def test_basis_indexing_leftmost_most_significant():
    assert basis_index(3, (1, 2)) == 5
    assert basis_tuple(3, 5, 2) == (1, 2)
    for k in range(27):
        assert basis_index(3, basis_tuple(3, k, 3)) == k


def test_kronecker_against_sympy():
    rng = random.Random(1)
    for _ in range(20):
        f, g = random_map(rng, QQ, 2, 1, 2), random_map(rng, QQ, 2, 2, 1)
        assert to_sympy(tensor(f, g)) == sympy.kronecker_product(to_sympy(f), to_sympy(g))


def test_compose_against_sympy():
    rng = random.Random(2)
    for _ in range(20):
        f, g = random_map(rng, QQ, 2, 2, 1), random_map(rng, QQ, 2, 1, 2)
        assert to_sympy(compose(g, f)) == to_sympy(g) * to_sympy(f)
        assert chain(g, f) == compose(g, f) == g @ f


def test_compose_arity_check():
    with pytest.raises(ArityMismatch):
        compose(LinMap.identity(QQ, 2, 1), LinMap.identity(QQ, 2, 2))


def test_transposition():
    tau = transposition(QQ, 3)
    for a, b in itertools.product(range(3), repeat=2):
        v = [QQ.zero] * 9
        v[basis_index(3, (a, b))] = QQ.one
        out = tau.apply(v)
        assert out[basis_index(3, (b, a))] == 1 and sum(out) == 1
    assert compose(tau, tau) == LinMap.identity(QQ, 3, 2)


def test_rank_kernel_against_sympy():
    rng = random.Random(3)
    for _ in range(30):
        f = random_map(rng, QQ, 2, 2, 2, density=rng.choice((0.1, 0.3, 0.8)))
        M = to_sympy(f)
        assert rank(f) == M.rank()
        K = kernel(f)
        assert K.dim == len(M.nullspace())
        for v in K.basis:
            assert all(x == 0 for x in f.apply(list(v)))


def test_rank_over_gf2():
    F = GF(2)
    f = LinMap.from_dense(F, 2, 1, 1, [[1, 1], [1, 1]])
    assert rank(f) == 1
    assert rank(f + LinMap.identity(F, 2, 1)) == 2  # [[0,1],[1,0]]
    assert rank(LinMap.from_dense(QQ, 2, 1, 1, [[1, 1], [1, 1]]).scale(2)) == 1


def test_invert():
    rng = random.Random(4)
    for _ in range(20):
        f = random_map(rng, QQ, 2, 1, 1, density=1.0)
        inv = invert(f)
        if to_sympy(f).det() == 0:
            assert inv is None
        else:
            assert compose(f, inv) == LinMap.identity(QQ, 2, 1)
    tau = transposition(QQ, 2)
    assert invert(tau) == tau
    assert invert(LinMap.zero(QQ, 2, 1, 1)) is None


def test_subspace_membership():
    S = Subspace.span(QQ, 3, [[1, 2, 0], [2, 4, 0], [0, 0, 1]])
    assert S.dim == 2
    assert (3, 6, 5) in S
    assert (1, 0, 0) not in S


def test_solve_affine():
    # x + y = 2, x - y = 0
    sol = solve_affine(QQ, [({0: 1, 1: 1}, 2), ({0: 1, 1: -1}, 0)], 2)
    assert list(sol.particular) == [1, 1] and sol.homogeneous.dim == 0
    assert solve_affine(QQ, [({0: 1}, 1), ({0: 1}, 2)], 1) is None


def test_first_difference_and_transpose():
    f = LinMap.from_dense(QQ, 2, 1, 1, [[1, 2], [3, 4]])
    g = LinMap.from_dense(QQ, 2, 1, 1, [[1, 2], [3, 5]])
    assert f.first_difference(g) == (1, 1, 4, 5)
    assert f.first_difference(f) is None
    assert f.transpose().to_dense() == [[1, 3], [2, 4]]
    assert f.entry(0, 1) == Fraction(2)
