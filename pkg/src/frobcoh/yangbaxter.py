"""R-matrices built from Frobenius structure maps and the Yang-Baxter check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    NoScalarHandle,
    NoSquareRoot,
    NoSolutionInField,
    NotCommutative,
    NotSymmetric,
    SingularCoefficient,
    YBEFails,
)
from .tensorlin import LinMap, chain, compose, invert, tensor

KINDS = ("delta-mu", "tau-delta-mu", "sandwich", "skein")


@dataclass(frozen=True)
class YBEResult:
    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def ybe_sides(R, I):
    RI, IR = tensor(R, I), tensor(I, R)
    return chain(RI, IR, RI), chain(IR, RI, IR)


def check_ybe(R) -> YBEResult:
    """(R|)(|R)(R|) == (|R)(R|)(|R); witness is (row, col, lhs, rhs)."""
    m = R.map if isinstance(R, RMatrix) else R
    I = LinMap.identity(m.field, m.dim, 1)
    lhs, rhs = ybe_sides(m, I)
    diff = lhs.first_difference(rhs)
    return YBEResult(diff is None, diff)


def _skein_map(alg, a, b, c, t):
    I2 = alg.identity(2)
    out = I2.scale(a)
    if b:
        out = out + compose(alg.gamma, alg.beta).scale(b)
    if c:
        out = out + compose(alg.delta, alg.mu).scale(c)
    if t:
        out = out + alg.tau.scale(t)
    return out


def build_map(alg, kind, coefficients=None):
    if kind == "delta-mu":
        return compose(alg.delta, alg.mu)
    if kind == "tau-delta-mu":
        return chain(alg.tau, alg.delta, alg.mu)
    if kind == "sandwich":
        return chain(alg.pad("mu", 0, 1), alg.pad("tau", 1, 0), alg.pad("delta", 0, 1))
    if kind == "skein":
        return _skein_map(alg, *coefficients)
    raise ValueError("unknown R-matrix kind %r" % kind)


@dataclass(eq=False)
class RMatrix:
    """A 2->2 map together with the formula that produced it."""

    map: LinMap
    kind: str
    algebra: object
    coefficients: Optional[tuple] = None

    def __post_init__(self):
        if not self.matches_provenance():
            raise ValueError("map does not match its %s provenance" % self.kind)

    def matches_provenance(self):
        return build_map(self.algebra, self.kind, self.coefficients) == self.map

    def describe(self):
        if self.kind != "skein":
            return self.kind
        F = self.algebra.field
        return "skein(A=%s, B=%s, C=%s, T=%s)" % tuple(F.format(x) for x in self.coefficients)


def _make(alg, kind, coefficients=None):
    return RMatrix(build_map(alg, kind, coefficients), kind, alg, coefficients)


def _closed_form(alg, kind):
    R = _make(alg, kind)
    res = check_ybe(R)
    if not res.ok:
        raise YBEFails("%s does not satisfy YBE on %s" % (kind, alg.name), res.witness)
    return R


def r_delta_mu(alg):
    return _closed_form(alg, "delta-mu")


def r_tau_delta_mu(alg):
    if not alg.symmetric:
        raise NotSymmetric("tau Delta mu needs a symmetric Frobenius algebra")
    return _closed_form(alg, "tau-delta-mu")


def r_sandwich(alg):
    if not alg.symmetric:
        raise NotSymmetric("(mu|)(|tau)(Delta|) needs a symmetric Frobenius algebra")
    return _closed_form(alg, "sandwich")


def r_skein(alg, a, b, c, t):
    F = alg.field
    return _make(alg, "skein", tuple(F(x) for x in (a, b, c, t)))


def invert_r(R):
    """Exact inverse of the underlying map, or None if singular."""
    m = R.map if isinstance(R, RMatrix) else R
    return invert(m)


def _is_inverse_pair(R, Rp):
    I2 = R.algebra.identity(2)
    return compose(R.map, Rp.map) == I2 and compose(Rp.map, R.map) == I2


@dataclass(frozen=True)
class SkeinSolution:
    R: RMatrix
    inverse: RMatrix
    ybe: YBEResult
    inverse_ok: bool


def solve_skein_case_i(alg):
    """Solutions R = |(x)| + B gamma beta with inverse |(x)| + B' gamma beta.

    A is normalised to 1, so B solves B^2 + delta0 B + 1 = 0 and the inverse
    has A' = 1, B' = -B / (1 + delta0 B).
    """
    F = alg.field
    if alg.scalar_handle is None:
        raise NoScalarHandle("handle element %s is not a scalar multiple of 1"
                             % alg.format_element(alg.handle_element))
    d0 = alg.delta0
    disc = d0 * d0 - 4
    if F.characteristic == 2:
        # B^2 + d0 B + 1 = 0 has no quadratic formula in characteristic 2
        roots = [b for b in _all_elements_gf(F) if b * b + d0 * b + 1 == 0]
        if not roots:
            raise NoSolutionInField("B^2 + %s B + 1 has no root in %s" % (F.format(d0), F))
    else:
        try:
            s = F.sqrt(disc)
        except NoSquareRoot:
            raise NoSolutionInField("discriminant %s is not a square in %s" % (F.format(disc), F)) from None
        roots = [(-d0 + s) / 2, (-d0 - s) / 2]
    out, seen = [], []
    for b in roots:
        if b in seen:
            continue
        seen.append(b)
        bp = -b / (1 + d0 * b)
        R = r_skein(alg, 1, b, 0, 0)
        Rp = r_skein(alg, 1, bp, 0, 0)
        sol = SkeinSolution(R, Rp, check_ybe(R), _is_inverse_pair(R, Rp))
        assert sol.ybe.ok and sol.inverse_ok, "case (i) solution failed verification"
        out.append(sol)
    return out


def _all_elements_gf(F):
    return [F(k) for k in range(F.characteristic)]


def solve_skein_case_ii(alg, c, t):
    """R = C Delta mu + T tau with inverse C' Delta mu + T' tau."""
    F = alg.field
    c, t = F(c), F(t)
    if not alg.commutative:
        raise NotCommutative("case (ii) needs a commutative Frobenius algebra")
    if alg.scalar_handle is None:
        raise NoScalarHandle("handle element %s is not a scalar multiple of 1"
                             % alg.format_element(alg.handle_element))
    if not c or not t:
        raise SingularCoefficient("C and T must both be nonzero")
    d1 = alg.scalar_handle
    denom = t + d1 * c
    if not denom:
        raise SingularCoefficient("T + delta1 C = 0")
    tp = F.one / t
    cp = -c * tp / denom
    R = r_skein(alg, 0, 0, c, t)
    Rp = r_skein(alg, 0, 0, cp, tp)
    sol = SkeinSolution(R, Rp, check_ybe(R), _is_inverse_pair(R, Rp))
    assert sol.ybe.ok and sol.inverse_ok, "case (ii) solution failed verification"
    return sol
