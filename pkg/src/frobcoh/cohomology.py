"""Cochains, the differentials D1, D2 (both variants), D3 and part of D4,
and cocycle / coboundary / cohomology dimensions.

A degree-n cochain has components i = 1..n with component i a map
A^{(x)(n+1-i)} -> A^{(x)i}.  Its coordinate vector is the concatenation of
the row-major flattenings of the components, so dim C^n = n * d^(n+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DegreeMismatch
from .tensorlin import LinMap, Subspace, chain, compose, matrix_kernel, matrix_rank, tensor


@dataclass(frozen=True)
class Cochain:
    degree: int
    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.degree:
            raise DegreeMismatch("degree-%d cochain needs %d components, got %d"
                                 % (self.degree, self.degree, len(comps)))
        for i, c in enumerate(comps, start=1):
            if (c.dom_arity, c.cod_arity) != (self.degree + 1 - i, i):
                raise DegreeMismatch("component %d of a degree-%d cochain must be %d->%d, got %d->%d"
                                     % (i, self.degree, self.degree + 1 - i, i, c.dom_arity, c.cod_arity))

    def __getitem__(self, i):
        """1-based, matching the component index."""
        return self.components[i - 1]

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __add__(self, other):
        return Cochain(self.degree, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        return Cochain(self.degree, tuple(a - b for a, b in zip(self.components, other.components)))

    def scale(self, c):
        return Cochain(self.degree, tuple(a.scale(c) for a in self.components))

    def vector(self):
        out = []
        for c in self.components:
            out.extend(c.flatten())
        return out

    def sparse_vector(self):
        out, offset = {}, 0
        for c in self.components:
            for k, v in c.sparse_flat().items():
                out[offset + k] = v
            offset += c.nrows * c.ncols
        return out


def cochain_dim(alg, degree):
    return degree * alg.dim ** (degree + 1)


def zero_cochain(alg, degree):
    F, d = alg.field, alg.dim
    return Cochain(degree, tuple(LinMap.zero(F, d, degree + 1 - i, i) for i in range(1, degree + 1)))


def cochain_from_vector(alg, degree, vec):
    """Inverse of ``Cochain.vector`` (dense list or {index: value})."""
    F, d = alg.field, alg.dim
    block = d ** (degree + 1)
    items = vec.items() if isinstance(vec, dict) else enumerate(vec)
    parts = [dict() for _ in range(degree)]
    for k, v in items:
        if v:
            i, off = divmod(k, block)
            parts[i][off] = v
    return Cochain(degree, tuple(
        LinMap.from_flat(F, d, degree - i, i + 1, parts[i]) for i in range(degree)))


def basis_cochain(alg, degree, k):
    return cochain_from_vector(alg, degree, {k: alg.field.one})


def random_cochain(alg, degree, rng, density=1.0):
    F = alg.field
    n = cochain_dim(alg, degree)
    vec = {k: F.random(rng) for k in range(n) if rng.random() < density}
    return cochain_from_vector(alg, degree, vec)


def _check(c, degree):
    if not isinstance(c, Cochain) or c.degree != degree:
        got = getattr(c, "degree", type(c).__name__)
        raise DegreeMismatch("expected a degree-%d cochain, got %s" % (degree, got))


# -- first differentials ------------------------------------------------------

def d11(alg, h):
    I, mu = alg.identity(), alg.mu
    return compose(mu, tensor(h, I)) + compose(mu, tensor(I, h)) - compose(h, mu)


def d12(alg, h):
    I, De = alg.identity(), alg.delta
    return compose(tensor(h, I), De) + compose(tensor(I, h), De) - compose(De, h)


def d1(alg, c):
    """D1(h) = (d11 h, -d12 h)."""
    _check(c, 1)
    h = c[1]
    return Cochain(2, (d11(alg, h), -d12(alg, h)))


# -- second differentials -----------------------------------------------------

def d21(alg, phi1):
    I, mu = alg.identity(), alg.mu
    return (compose(mu, tensor(phi1, I)) + compose(phi1, alg.pad("mu", 0, 1))
            - compose(mu, tensor(I, phi1)) - compose(phi1, alg.pad("mu", 1, 0)))


def d22(alg, phi1, phi2, variant=1):
    I, mu, De = alg.identity(), alg.mu, alg.delta
    out = compose(De, phi1) + compose(phi2, mu)
    if variant == 1:
        return (out - compose(tensor(phi1, I), alg.pad("delta", 1, 0))
                - compose(alg.pad("mu", 0, 1), tensor(I, phi2)))
    if variant == 2:
        return (out - compose(tensor(I, phi1), alg.pad("delta", 0, 1))
                - compose(alg.pad("mu", 1, 0), tensor(phi2, I)))
    raise ValueError("variant must be 1 or 2")


def d23(alg, phi2):
    I, De = alg.identity(), alg.delta
    return (compose(tensor(phi2, I), De) + compose(alg.pad("delta", 0, 1), phi2)
            - compose(tensor(I, phi2), De) - compose(alg.pad("delta", 1, 0), phi2))


def d2(alg, c, variant=1):
    _check(c, 2)
    phi1, phi2 = c[1], c[2]
    return Cochain(3, (d21(alg, phi1), d22(alg, phi1, phi2, variant), d23(alg, phi2)))


# -- third differentials ------------------------------------------------------

def d31(alg, xi1):
    I, mu = alg.identity(), alg.mu
    return (compose(mu, tensor(xi1, I)) + compose(xi1, alg.pad("mu", 1, 1))
            + compose(mu, tensor(I, xi1))
            - compose(xi1, alg.pad("mu", 0, 2)) - compose(xi1, alg.pad("mu", 2, 0)))


def d32(alg, xi1, xi2, variant=1):
    I, De = alg.identity(), alg.delta
    if variant == 1:
        return (compose(De, xi1) + compose(xi2, alg.pad("mu", 1, 0))
                + compose(alg.pad("mu", 0, 1), tensor(I, xi2))
                - compose(xi2, alg.pad("mu", 0, 1))
                - compose(tensor(xi1, I), alg.pad("delta", 2, 0)))
    if variant == 2:
        # left-right mirror of variant 1, signs fixed by D3 D2 = 0
        return (compose(De, xi1) - compose(xi2, alg.pad("mu", 0, 1))
                - compose(alg.pad("mu", 1, 0), tensor(xi2, I))
                + compose(xi2, alg.pad("mu", 1, 0))
                - compose(tensor(I, xi1), alg.pad("delta", 0, 2)))
    raise ValueError("variant must be 1 or 2")


def d33(alg, xi2, xi3, variant=1):
    I, mu = alg.identity(), alg.mu
    if variant == 1:
        # The displayed d33 is the up-down mirror of d32, which pairs with
        # the mirrored compatibility (variant 2).  This is its left-right
        # mirror, signs fixed by D3 D2 = 0.
        return (compose(xi3, mu) + compose(alg.pad("delta", 1, 0), xi2)
                - compose(alg.pad("delta", 0, 1), xi2)
                - compose(tensor(xi2, I), alg.pad("delta", 1, 0))
                - compose(alg.pad("mu", 0, 2), tensor(I, xi3)))
    if variant == 2:
        return (compose(xi3, mu) + compose(alg.pad("delta", 1, 0), xi2)
                + compose(tensor(I, xi2), alg.pad("delta", 0, 1))
                - compose(alg.pad("delta", 0, 1), xi2)
                - compose(alg.pad("mu", 2, 0), tensor(xi3, I)))
    raise ValueError("variant must be 1 or 2")


def d34(alg, xi3):
    # co-Hochschild dual of d31
    I, De = alg.identity(), alg.delta
    return (compose(tensor(xi3, I), De) + compose(alg.pad("delta", 1, 1), xi3)
            + compose(tensor(I, xi3), De)
            - compose(alg.pad("delta", 0, 2), xi3) - compose(alg.pad("delta", 2, 0), xi3))


def d3(alg, c, variant=1):
    _check(c, 3)
    xi1, xi2, xi3 = c[1], c[2], c[3]
    return Cochain(4, (d31(alg, xi1), d32(alg, xi1, xi2, variant),
                       d33(alg, xi2, xi3, variant), d34(alg, xi3)))


# -- fourth differentials (partial) ------------------------------------------

def d41(alg, z1):
    I, mu = alg.identity(), alg.mu
    return (compose(mu, tensor(z1, I)) - compose(mu, tensor(I, z1))
            + compose(z1, alg.pad("mu", 0, 3)) - compose(z1, alg.pad("mu", 1, 2))
            + compose(z1, alg.pad("mu", 2, 1)) - compose(z1, alg.pad("mu", 3, 0)))


def d42(alg, z1, z2, corrected=False):
    """Displayed formula by default; ``corrected`` flips the two signs that
    make d42(d31 xi, d32 xi) vanish."""
    I, De = alg.identity(), alg.delta
    s = -1 if corrected else 1
    return (compose(De, z1) + compose(z2, alg.pad("mu", 2, 0))
            + compose(alg.pad("mu", 0, 1), tensor(I, z2)).scale(s)
            - compose(tensor(z1, I), alg.pad("delta", 3, 0))
            - compose(z2, alg.pad("mu", 0, 2)).scale(s)
            - compose(z2, alg.pad("mu", 1, 1)))


def d44(alg, z3, z4, corrected=False):
    """Up-down mirror of the displayed d42 by default.  ``corrected`` gives
    the form that pairs with the variant-1 d33 and d34 above."""
    I, mu = alg.identity(), alg.mu
    if corrected:
        return (compose(z4, mu) + compose(alg.pad("delta", 0, 2), z3)
                - compose(tensor(z3, I), alg.pad("delta", 1, 0))
                - compose(alg.pad("mu", 0, 3), tensor(I, z4))
                + compose(alg.pad("delta", 2, 0), z3)
                - compose(alg.pad("delta", 1, 1), z3))
    return (compose(z4, mu) + compose(alg.pad("delta", 2, 0), z3)
            + compose(tensor(I, z3), alg.pad("delta", 0, 1))
            - compose(alg.pad("mu", 3, 0), tensor(z4, I))
            - compose(alg.pad("delta", 0, 2), z3) - compose(alg.pad("delta", 1, 1), z3))


def d45(alg, z4):
    I, De = alg.identity(), alg.delta
    return (compose(tensor(z4, I), De) - compose(tensor(I, z4), De)
            + compose(alg.pad("delta", 0, 3), z4) - compose(alg.pad("delta", 1, 2), z4)
            + compose(alg.pad("delta", 2, 1), z4) - compose(alg.pad("delta", 3, 0), z4))


def d4_partial(alg, c, corrected=False):
    """Components 1, 2, 4, 5 of D4; component 3 has no formula."""
    _check(c, 4)
    z1, z2, z3, z4 = c[1], c[2], c[3], c[4]
    return {1: d41(alg, z1), 2: d42(alg, z1, z2, corrected),
            4: d44(alg, z3, z4, corrected), 5: d45(alg, z4)}


# -- assembled matrices -------------------------------------------------------

def differential(alg, n, c, variant=1):
    if n == 1:
        return d1(alg, c)
    if n == 2:
        return d2(alg, c, variant)
    if n == 3:
        return d3(alg, c, variant)
    raise DegreeMismatch("D%d is not defined here" % n)


def differential_matrix(alg, n, variant=1):
    """Sparse rows of D_n acting on coordinate vectors: {row: {col: value}}."""
    rows = {}
    for j in range(cochain_dim(alg, n)):
        image = differential(alg, n, basis_cochain(alg, n, j), variant).sparse_vector()
        for i, v in image.items():
            rows.setdefault(i, {})[j] = v
    return rows


def sparse_product(field, a_rows, b_rows):
    out = {}
    for r, arow in a_rows.items():
        acc = {}
        for k, x in arow.items():
            brow = b_rows.get(k)
            if brow:
                for c, y in brow.items():
                    acc[c] = acc[c] + x * y if c in acc else x * y
        acc = {c: v for c, v in acc.items() if v}
        if acc:
            out[r] = acc
    return out


@dataclass
class ComplexReport:
    algebra: str
    variant: int
    z: dict = dc_field(default_factory=dict)
    b: dict = dc_field(default_factory=dict)
    h: dict = dc_field(default_factory=dict)
    checks: dict = dc_field(default_factory=dict)

    def as_dict(self):
        return {
            "variant": self.variant,
            "degrees": {str(n): {"Z": self.z[n], "B": self.b[n], "H": self.h[n]} for n in sorted(self.z)},
            "chain_checks": dict(self.checks),
        }


def cohomology_dims(alg, max_degree=2, variant=1):
    if not 1 <= max_degree <= 3:
        raise DegreeMismatch("max_degree must be 1, 2 or 3")
    F = alg.field
    mats = {n: differential_matrix(alg, n, variant) for n in range(1, max_degree + 1)}
    ranks = {n: matrix_rank(F, mats[n], cochain_dim(alg, n)) for n in mats}
    rep = ComplexReport(alg.name, variant)
    for n in range(1, max_degree + 1):
        rep.z[n] = cochain_dim(alg, n) - ranks[n]
        rep.b[n] = ranks[n - 1] if n > 1 else 0
        rep.h[n] = rep.z[n] - rep.b[n]
    for n in range(2, max_degree + 1):
        ok = not sparse_product(F, mats[n], mats[n - 1])
        rep.checks["D%dD%d=0" % (n, n - 1)] = ok
    return rep


def cocycle_basis(alg, degree, variant=1):
    mat = differential_matrix(alg, degree, variant)
    ker = matrix_kernel(alg.field, mat, cochain_dim(alg, degree))
    return [cochain_from_vector(alg, degree, list(v)) for v in ker.basis]


def cocycle_space(alg, degree, variant=1) -> Subspace:
    mat = differential_matrix(alg, degree, variant)
    return matrix_kernel(alg.field, mat, cochain_dim(alg, degree))


# -- chain identities ---------------------------------------------------------

def chain_identity(alg, outer, inner, variant=1):
    """True iff D_outer . D_inner = 0, checked on every basis cochain.

    Returns ``(ok, witness)`` where witness is the first basis index whose
    image under the composite is nonzero.
    """
    for j in range(cochain_dim(alg, inner)):
        c = basis_cochain(alg, inner, j)
        img = differential(alg, outer, differential(alg, inner, c, variant), variant)
        if not img.is_zero():
            return False, j
    return True, None


def _discrepancies(alg, values):
    out = []
    for k, val in enumerate(values):
        if not val.is_zero():
            r = min(val.rows)
            c = min(val.rows[r])
            out.append({"sample": k, "row": r, "col": c,
                        "value": alg.field.format(val.rows[r][c]), "nonzero_entries": val.nnz()})
    return out


def degree4_component_report(alg, samples):
    """Check d42(d31 xi, d32 xi) = 0 and d44(d33 xi, d34 xi) = 0.

    Each formula is tried as stated and in sign-corrected form; the result
    is a JSON-ready dict with a witness list per formula.
    """
    report = {}
    for corrected in (False, True):
        tag = "corrected" if corrected else "as_stated"
        v42 = [d42(alg, d31(alg, xi[1]), d32(alg, xi[1], xi[2]), corrected) for xi in samples]
        v44 = [d44(alg, d33(alg, xi[2], xi[3]), d34(alg, xi[3]), corrected) for xi in samples]
        for name, vals in (("d42", v42), ("d44", v44)):
            bad = _discrepancies(alg, vals)
            report["%s_%s" % (name, tag)] = {"holds": not bad, "samples": len(samples),
                                             "witnesses": bad[:3]}
    return report
