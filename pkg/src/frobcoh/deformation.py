"""First-order deformations over the dual numbers k[t]/(t^2).

Deforming (mu, Delta) to (mu + t phi1, Delta + t phi2), the order-t parts of
the associativity, compatibility and coassociativity defects are the primary
obstructions.  For commutative algebras with a scalar handle, the 2-cochains
that are cocycles for both compatibility shapes, are symmetric, and keep the
handle scalar at order t give deformed solutions C (Delta_t mu_t) + T tau of
the Yang-Baxter equation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import cohomology as coh
from .errors import NoScalarHandle, NotCommutative, NotProportionalToIdentity
from .tensorlin import LinMap, Subspace, compose, matrix_kernel, tensor


@dataclass(frozen=True)
class DualScalar:
    """a0 + a1 t with t^2 = 0."""

    a0: object
    a1: object

    def _lift(self, other):
        if isinstance(other, DualScalar):
            return other
        return DualScalar(other, other * 0)

    def __add__(self, other):
        o = self._lift(other)
        return DualScalar(self.a0 + o.a0, self.a1 + o.a1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return DualScalar(self.a0 - o.a0, self.a1 - o.a1)

    def __neg__(self):
        return DualScalar(-self.a0, -self.a1)

    def __mul__(self, other):
        o = self._lift(other)
        return DualScalar(self.a0 * o.a0, self.a0 * o.a1 + self.a1 * o.a0)

    __rmul__ = __mul__

    def inverse(self):
        inv0 = 1 / self.a0
        return DualScalar(inv0, -self.a1 * inv0 * inv0)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __bool__(self):
        return bool(self.a0) or bool(self.a1)

    def __eq__(self, other):
        if not isinstance(other, DualScalar):
            other = self._lift(other)
        return self.a0 == other.a0 and self.a1 == other.a1

    def __hash__(self):
        return hash((self.a0, self.a1))

    def format(self, field):
        if not self.a1:
            return field.format(self.a0)
        return "%s + %s t" % (field.format(self.a0), field.format(self.a1))


@dataclass(frozen=True, eq=False)
class DualLinMap:
    """f0 + t f1."""

    f0: LinMap
    f1: LinMap

    def __post_init__(self):
        if self.f0.shape != self.f1.shape or self.f0.dim != self.f1.dim:
            raise ValueError("order-0 and order-t parts must have the same shape")

    @classmethod
    def constant(cls, f):
        return cls(f, LinMap.zero(f.field, f.dim, f.dom_arity, f.cod_arity))

    @property
    def field(self):
        return self.f0.field

    @property
    def dom_arity(self):
        return self.f0.dom_arity

    @property
    def cod_arity(self):
        return self.f0.cod_arity

    def __add__(self, other):
        return DualLinMap(self.f0 + other.f0, self.f1 + other.f1)

    def __sub__(self, other):
        return DualLinMap(self.f0 - other.f0, self.f1 - other.f1)

    def __neg__(self):
        return DualLinMap(-self.f0, -self.f1)

    def scale(self, c):
        if isinstance(c, DualScalar):
            return DualLinMap(self.f0.scale(c.a0), self.f1.scale(c.a0) + self.f0.scale(c.a1))
        return DualLinMap(self.f0.scale(c), self.f1.scale(c))

    def __eq__(self, other):
        return isinstance(other, DualLinMap) and self.f0 == other.f0 and self.f1 == other.f1

    __hash__ = None

    def first_difference(self, other):
        """(order, row, col, lhs, rhs) of the first differing entry, or None."""
        for order, a, b in ((0, self.f0, other.f0), (1, self.f1, other.f1)):
            diff = a.first_difference(b)
            if diff is not None:
                return (order,) + tuple(diff)
        return None


def dual(f):
    return f if isinstance(f, DualLinMap) else DualLinMap.constant(f)


def dcompose(g, f):
    g, f = dual(g), dual(f)
    return DualLinMap(compose(g.f0, f.f0), compose(g.f0, f.f1) + compose(g.f1, f.f0))


def dchain(*maps):
    out = dual(maps[-1])
    for g in reversed(maps[:-1]):
        out = dcompose(g, out)
    return out


def dtensor(*maps):
    maps = [dual(m) for m in maps]
    out = maps[0]
    for m in maps[1:]:
        out = DualLinMap(tensor(out.f0, m.f0), tensor(out.f0, m.f1) + tensor(out.f1, m.f0))
    return out


def deformed_structure(alg, phi1, phi2):
    return DualLinMap(alg.mu, phi1), DualLinMap(alg.delta, phi2)


def _defects(mu_t, de_t):
    """Associator, both compatibility defects and coassociator of (mu_t, de_t)."""
    I = dual(LinMap.identity(mu_t.field, mu_t.f0.dim, 1))
    assoc = dcompose(mu_t, dtensor(mu_t, I)) - dcompose(mu_t, dtensor(I, mu_t))
    dm = dcompose(de_t, mu_t)
    compat1 = dm - dcompose(dtensor(mu_t, I), dtensor(I, de_t))
    compat2 = dm - dcompose(dtensor(I, mu_t), dtensor(de_t, I))
    coassoc = dcompose(dtensor(de_t, I), de_t) - dcompose(dtensor(I, de_t), de_t)
    return assoc, compat1, compat2, coassoc


@dataclass(frozen=True)
class Obstruction:
    xi1: LinMap
    xi2: LinMap
    xi2_prime: LinMap
    xi3: LinMap

    def cochain(self, variant=1):
        mid = self.xi2 if variant == 1 else self.xi2_prime
        return coh.Cochain(3, (self.xi1, mid, self.xi3))

    def is_zero(self):
        return all(m.is_zero() for m in (self.xi1, self.xi2, self.xi2_prime, self.xi3))


def primary_obstruction(alg, phi1, phi2):
    if isinstance(phi1, coh.Cochain):
        phi1, phi2 = phi1[1], phi1[2]
    parts = _defects(*deformed_structure(alg, phi1, phi2))
    return Obstruction(*(p.f1 for p in parts))


def check_frobenius_mod_t2(mu_t, de_t):
    """Associativity, both compatibilities and coassociativity mod t^2."""
    mu_t, de_t = dual(mu_t), dual(de_t)
    if (mu_t.dom_arity, mu_t.cod_arity, de_t.dom_arity, de_t.cod_arity) != (2, 1, 1, 2):
        raise ValueError("expected mu_t: 2->1 and Delta_t: 1->2")
    return all(p.f0.is_zero() and p.f1.is_zero() for p in _defects(mu_t, de_t))


def _require_hypotheses(alg):
    if not alg.commutative:
        raise NotCommutative("deformed R-matrices need a commutative Frobenius algebra")
    if alg.scalar_handle is None:
        raise NoScalarHandle("handle element %s is not a scalar multiple of 1"
                             % alg.format_element(alg.handle_element))


def _constraint_column(alg, c):
    """All constraint values for the 2-cochain c, as one sparse vector."""
    phi1, phi2 = c[1], c[2]
    tau = alg.tau
    blocks = list(coh.d2(alg, c, 1).components)
    blocks.append(coh.d22(alg, phi1, phi2, 2))
    blocks.append(compose(phi1, tau) - phi1)
    blocks.append(compose(tau, phi2) - phi2)
    blocks.append(compose(alg.mu, phi2) + compose(phi1, alg.delta))
    out, offset = {}, 0
    for b in blocks:
        for k, v in b.sparse_flat().items():
            out[offset + k] = v
        offset += b.nrows * b.ncols
    return out, offset


@dataclass(frozen=True)
class ConstraintSpace:
    algebra: object
    space: Subspace

    @property
    def dim(self):
        return self.space.dim

    def cochains(self):
        return [coh.cochain_from_vector(self.algebra, 2, v) for v in self.space.basis]

    def __contains__(self, c):
        vec = c.vector() if isinstance(c, coh.Cochain) else c
        return vec in self.space


def deformation_constraint_space(alg):
    """Solutions of the linear system for deformed skein R-matrices.

    Unknowns are the 2d^3 cochain coordinates plus one auxiliary scalar s,
    with mu phi2 + phi1 Delta = s * identity; s is projected out at the end.
    """
    _require_hypotheses(alg)
    F = alg.field
    n = coh.cochain_dim(alg, 2)
    columns = []
    for k in range(n):
        col, total = _constraint_column(alg, coh.basis_cochain(alg, 2, k))
        columns.append(col)
    # the auxiliary column: -s * identity in the last block
    ident_block = total - alg.dim * alg.dim
    aux = {ident_block + k: -v for k, v in alg.identity().sparse_flat().items()}
    columns.append(aux)
    rows = {}
    for j, col in enumerate(columns):
        for r, v in col.items():
            rows.setdefault(r, {})[j] = v
    ker = matrix_kernel(F, list(rows.values()), n + 1)
    projected = [v[:n] for v in ker.basis]
    return ConstraintSpace(alg, Subspace.span(F, n, projected))


def delta1_of(alg, phi1, phi2):
    """The dual scalar delta1 with mu_t Delta_t = delta1 * identity."""
    if isinstance(phi1, coh.Cochain):
        phi1, phi2 = phi1[1], phi1[2]
    if alg.scalar_handle is None:
        raise NoScalarHandle("handle element %s is not a scalar multiple of 1"
                             % alg.format_element(alg.handle_element))
    first = compose(alg.mu, phi2) + compose(phi1, alg.delta)
    I = alg.identity()
    s = first.entry(0, 0)
    if first != I.scale(s):
        raise NotProportionalToIdentity("mu phi2 + phi1 Delta is not a multiple of the identity")
    return DualScalar(alg.scalar_handle, s)


def deformed_r(alg, phi1, phi2, c, t):
    """C (Delta + t phi2)(mu + t phi1) + T tau and its YBE verdict mod t^2."""
    if isinstance(phi1, coh.Cochain):
        phi1, phi2 = phi1[1], phi1[2]
    F = alg.field
    mu_t, de_t = deformed_structure(alg, phi1, phi2)
    R = dcompose(de_t, mu_t).scale(F(c)) + dual(alg.tau).scale(F(t))
    return R, check_ybe_dual(R)


def check_ybe_dual(R):
    return ybe_witness_dual(R) is None


def ybe_witness_dual(R):
    I = dual(LinMap.identity(R.field, R.f0.dim, 1))
    RI, IR = dtensor(R, I), dtensor(I, R)
    return dchain(RI, IR, RI).first_difference(dchain(IR, RI, IR))


def find_violation(alg, c, t, grid=(-1, 1), limit=None):
    """Search 2-cochains outside the constraint space for a YBE failure.

    Tries single basis directions first, then pairs with coefficients from
    ``grid``.  Returns (cochain, witness) or None if nothing was found.
    """
    space = deformation_constraint_space(alg)
    n = coh.cochain_dim(alg, 2)
    F = alg.field
    tried = 0
    candidates = itertools.chain(
        (((k, F.one),) for k in range(n)),
        (((j, F(a)), (k, F(b))) for j, k in itertools.combinations(range(n), 2)
         for a in grid for b in grid))
    for combo in candidates:
        vec = dict(combo)
        c2 = coh.cochain_from_vector(alg, 2, vec)
        if c2.vector() in space.space:
            continue
        R, ok = deformed_r(alg, c2, None, c, t)
        if not ok:
            return c2, ybe_witness_dual(R)
        tried += 1
        if limit is not None and tried >= limit:
            break
    return None


# -- named coordinates --------------------------------------------------------

def coordinate_names(alg):
    """lambda^c_{a,b} for phi1(a(x)b) and gamma_a^{b,c} for phi2(a), in cochain order."""
    names = alg.basis_names
    out = []
    for c in names:
        for a in names:
            for b in names:
                out.append("lambda^%s_{%s,%s}" % (c, a, b))
    for b in names:
        for cc in names:
            for a in names:
                out.append("gamma_%s^{%s,%s}" % (a, b, cc))
    return out


# Short names used for the two worked examples.
ALIASES = {
    "complex": {"lambda^1_{1,i}": "lambda", "lambda^i_{1,i}": "lambda'"},
    "group:Z2": {"lambda^1_{1,x}": "lambda", "lambda^x_{1,x}": "lambda'",
                 "gamma_1^{1,1}": "q", "gamma_1^{1,x}": "r"},
}


def coordinates(alg, c):
    """{name: value} of the nonzero coordinates of a 2-cochain."""
    names = coordinate_names(alg)
    vec = c.vector() if isinstance(c, coh.Cochain) else c
    return {names[k]: v for k, v in enumerate(vec) if v}


def coordinate(alg, c, name):
    names = coordinate_names(alg)
    vec = c.vector() if isinstance(c, coh.Cochain) else c
    return vec[names.index(name)]


def display_name(alg, name):
    return ALIASES.get(alg.name, {}).get(name, name)
