"""Frobenius algebras given by structure constants.

``AlgebraPresentation`` is raw data (basis names, products, unit, counit).
``validate`` turns it into a ``FrobeniusAlgebra`` carrying every derived
map: pairing, copairing, comultiplication and the handle data.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from typing import Optional

from .errors import (
    DegeneratePairing,
    FrobeniusAxiomFails,
    InputError,
    NotAGroup,
    NotAssociative,
    UnitLawFails,
    ZeroParameter,
)
from .scalars import QQ, QQi, GaussianRational
from .tensorlin import (
    LinMap,
    basis_tuple,
    chain,
    identity,
    matrix_rank,
    tensor,
    transposition,
)


@dataclass(frozen=True)
class AlgebraPresentation:
    """``mul[a][b]`` holds the coordinates of e_a e_b (length d)."""

    field: object
    basis_names: tuple
    mul: tuple
    unit: tuple
    counit: tuple
    name: str = "algebra"

    @property
    def dim(self):
        return len(self.basis_names)

    def check_shape(self):
        d = self.dim
        if d < 1:
            raise InputError("an algebra needs at least one basis element")
        if len(set(self.basis_names)) != d:
            raise InputError("basis names must be unique")
        if len(self.mul) != d or any(len(row) != d for row in self.mul):
            raise InputError("multiplication table must be %dx%d" % (d, d))
        if any(len(v) != d for row in self.mul for v in row):
            raise InputError("every product needs %d coordinates" % d)
        if len(self.unit) != d or len(self.counit) != d:
            raise InputError("unit and counit need %d coordinates" % d)

    def mu_map(self):
        F, d = self.field, self.dim
        rows = {}
        for a in range(d):
            for b in range(d):
                for c, v in enumerate(self.mul[a][b]):
                    if v:
                        rows.setdefault(c, {})[a * d + b] = F(v)
        return LinMap(F, d, 2, 1, rows)

    def left_multiplication(self, a):
        """Matrix of x -> e_a x as a 1->1 LinMap."""
        F, d = self.field, self.dim
        return LinMap.from_columns(F, d, 1, 1, [self.mul[a][b] for b in range(d)])


@dataclass(eq=False)
class FrobeniusAlgebra:
    pres: AlgebraPresentation
    mu: LinMap
    eta: LinMap
    epsilon: LinMap
    beta: LinMap
    gamma: LinMap
    delta: LinMap
    delta0: object
    handle_element: tuple
    symmetric: bool
    commutative: bool
    scalar_handle: Optional[object]
    _pads: dict = dc_field(default_factory=dict, repr=False)

    @property
    def field(self):
        return self.pres.field

    @property
    def dim(self):
        return self.pres.dim

    @property
    def name(self):
        return self.pres.name

    @property
    def basis_names(self):
        return self.pres.basis_names

    def identity(self, arity=1):
        return identity(self.field, self.dim, arity)

    @property
    def tau(self):
        return self.pad("tau", 0, 0)

    def pad(self, which, left, right):
        """Cached ``|^left (x) S (x) |^right`` for a structure map S."""
        key = (which, left, right)
        m = self._pads.get(key)
        if m is None:
            base = {"mu": self.mu, "delta": self.delta, "beta": self.beta,
                    "gamma": self.gamma, "eta": self.eta, "epsilon": self.epsilon,
                    "tau": transposition(self.field, self.dim)}[which]
            parts = []
            if left:
                parts.append(self.identity(left))
            parts.append(base)
            if right:
                parts.append(self.identity(right))
            m = tensor(*parts)
            self._pads[key] = m
        return m

    # elements as coordinate vectors

    def multiply(self, u, v):
        return self.mu.apply(tensor_vectors(self.field, u, v))

    def unit_vector(self):
        return tuple(self.pres.unit)

    def basis_vector(self, a):
        F = self.field
        return tuple(F.one if i == a else F.zero for i in range(self.dim))

    def format_element(self, vec):
        return format_lincomb(self.field, self.basis_names, vec)

    def format_tensor(self, vec, arity):
        return format_tensor(self.field, self.basis_names, vec, arity)


def tensor_vectors(field, *vectors):
    out = [field.one]
    for v in vectors:
        out = [a * b for a in out for b in v]
    return out


def format_lincomb(field, names, vec):
    terms = []
    for name, c in zip(names, vec):
        if not c:
            continue
        terms.append(name if c == field.one else "%s * %s" % (field.format(c), name))
    return " + ".join(terms) if terms else "0"


def format_tensor(field, names, vec, arity):
    d = len(names)
    terms = []
    for k, c in enumerate(vec):
        if not c:
            continue
        label = "(x)".join(names[a] for a in basis_tuple(d, k, arity))
        terms.append(label if c == field.one else "%s * %s" % (field.format(c), label))
    return " + ".join(terms) if terms else "0"


def _first_nonzero(m):
    for r in sorted(m.rows):
        c = min(m.rows[r])
        return r, c
    return None


def _require(cond, identity):
    if not cond:
        raise FrobeniusAxiomFails(identity)


def validate(pres: AlgebraPresentation) -> FrobeniusAlgebra:
    pres.check_shape()
    F, d = pres.field, pres.dim
    pres = replace(
        pres,
        mul=tuple(tuple(tuple(F(x) for x in v) for v in row) for row in pres.mul),
        unit=tuple(F(x) for x in pres.unit),
        counit=tuple(F(x) for x in pres.counit),
    )
    I = identity(F, d)
    mu = pres.mu_map()
    eta = LinMap.from_columns(F, d, 0, 1, [pres.unit])
    epsilon = LinMap.from_dense(F, d, 1, 0, [list(pres.counit)])

    if chain(mu, tensor(eta, I)) != I or chain(mu, tensor(I, eta)) != I:
        raise UnitLawFails("unit vector %s is not a two-sided unit" % (pres.unit,))

    assoc = chain(mu, tensor(mu, I)) - chain(mu, tensor(I, mu))
    if not assoc.is_zero():
        _, col = _first_nonzero(assoc)
        a, b, c = basis_tuple(d, col, 3)
        names = pres.basis_names
        raise NotAssociative((names[a], names[b], names[c]))

    beta = chain(epsilon, mu)
    gram = [[beta.entry(0, a * d + b) for b in range(d)] for a in range(d)]
    if matrix_rank(F, [{j: v for j, v in enumerate(r) if v} for r in gram], d) < d:
        raise DegeneratePairing("pairing x(x)y -> eps(xy) is degenerate")
    ginv = _inverse_dense(F, gram)
    # gamma(1) = sum_ab (B^-1)_ab e_a (x) e_b: this index order is the one
    # for which the cancelation identities hold (asserted below).
    gamma = LinMap.from_columns(F, d, 0, 2, [[ginv[a][b] for a in range(d) for b in range(d)]])

    _require(chain(tensor(beta, I), tensor(I, gamma)) == I, "(beta|)(|gamma) = |")
    _require(chain(tensor(I, beta), tensor(gamma, I)) == I, "(|beta)(gamma|) = |")

    delta = chain(tensor(mu, I), tensor(I, gamma))
    _require(delta == chain(tensor(I, mu), tensor(gamma, I)), "Delta = (|mu)(gamma|)")
    dm = chain(delta, mu)
    _require(dm == chain(tensor(mu, I), tensor(I, delta)), "Delta mu = (mu|)(|Delta)")
    _require(dm == chain(tensor(I, mu), tensor(delta, I)), "Delta mu = (|mu)(Delta|)")
    _require(chain(tensor(delta, I), delta) == chain(tensor(I, delta), delta), "coassociativity")
    _require(chain(tensor(epsilon, I), delta) == I, "(eps|)Delta = |")
    _require(chain(tensor(I, epsilon), delta) == I, "(|eps)Delta = |")
    _require(chain(beta, tensor(mu, I)) == chain(beta, tensor(I, mu)), "beta(mu|) = beta(|mu)")

    tau = transposition(F, d)
    commutative = chain(mu, tau) == mu
    cocommutative = chain(tau, delta) == delta
    _require(commutative == cocommutative, "commutative <=> cocommutative")
    symmetric = chain(beta, tau) == beta

    handle = tuple(chain(mu, gamma).column(0))
    handle_op = chain(mu, delta)
    left_h = LinMap.from_columns(F, d, 1, 1, [
        mu.apply([h * u for h in handle for u in _unit(F, d, b)]) for b in range(d)])
    _require(handle_op == left_h, "mu Delta = multiplication by the handle element")
    for b in range(d):
        eb = _unit(F, d, b)
        _require(mu.apply(tensor_vectors(F, handle, eb)) == mu.apply(tensor_vectors(F, eb, handle)),
                 "handle element is central")

    delta0 = chain(beta, gamma).entry(0, 0)
    scalar_handle = _scalar_multiple(F, handle, pres.unit)
    if scalar_handle is not None:
        _require(handle_op == I.scale(scalar_handle), "mu Delta = delta1 |")
        eps1 = sum((e * u for e, u in zip(pres.counit, pres.unit)), F.zero)
        _require(delta0 == scalar_handle * eps1, "delta0 = delta1 eps(1)")

    return FrobeniusAlgebra(
        pres=pres, mu=mu, eta=eta, epsilon=epsilon, beta=beta, gamma=gamma,
        delta=delta, delta0=delta0, handle_element=handle, symmetric=symmetric,
        commutative=commutative, scalar_handle=scalar_handle,
    )


def _unit(F, d, b):
    return [F.one if i == b else F.zero for i in range(d)]


def _scalar_multiple(F, vec, base):
    """c with vec = c * base, or None."""
    k = next((i for i, x in enumerate(base) if x), None)
    if k is None:
        return None
    c = vec[k] / base[k]
    if all(v == c * b for v, b in zip(vec, base)):
        return c
    return None


def _inverse_dense(F, m):
    from .tensorlin import rref

    n = len(m)
    rows = []
    for i, r in enumerate(m):
        row = {j: v for j, v in enumerate(r) if v}
        row[n + i] = F.one
        rows.append(row)
    piv = rref(F, rows, 2 * n)
    return [[piv[i].get(n + j, F.zero) for j in range(n)] for i in range(n)]


def handle_data(alg: FrobeniusAlgebra):
    """(handle element, delta0, delta1 or None)."""
    return alg.handle_element, alg.delta0, alg.scalar_handle


# -- builders -----------------------------------------------------------------

def _vec(F, d, entries):
    out = [F.zero] * d
    for i, v in entries.items():
        out[i] = F(v)
    return tuple(out)


def build_complex() -> AlgebraPresentation:
    """C over R, modelled over Q with basis (1, i)."""
    F = QQ
    mul = (
        (_vec(F, 2, {0: 1}), _vec(F, 2, {1: 1})),
        (_vec(F, 2, {1: 1}), _vec(F, 2, {0: -1})),
    )
    return AlgebraPresentation(F, ("1", "i"), mul, _vec(F, 2, {0: 1}), _vec(F, 2, {0: 1}), "complex")


def build_poly(n: int, field=QQ) -> AlgebraPresentation:
    """k[x]/(x^n) with eps(x^(n-1)) = 1."""
    if n < 2:
        raise InputError("poly needs n >= 2")
    F = field
    names = tuple(["1", "x"] + ["x^%d" % j for j in range(2, n)])
    mul = tuple(
        tuple(_vec(F, n, {a + b: 1} if a + b < n else {}) for b in range(n))
        for a in range(n)
    )
    return AlgebraPresentation(F, names, mul, _vec(F, n, {0: 1}), _vec(F, n, {n - 1: 1}), "poly:%d" % n)


def check_group_table(table):
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise NotAGroup("table must be square and non-empty")
    if any(not (0 <= x < n) for row in table for x in row):
        raise NotAGroup("table entries must be element indices")
    ids = [e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    for a in range(n):
        if not any(table[a][b] == e and table[b][a] == e for b in range(n)):
            raise NotAGroup("element %d has no inverse" % a)
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise NotAGroup("not associative at (%d, %d, %d)" % (a, b, c))
    return e


def build_group(mult_table, field=QQ, names=None, name="group") -> AlgebraPresentation:
    """Group algebra kG with eps(g) = [g = identity]."""
    e = check_group_table(mult_table)
    F = field
    n = len(mult_table)
    names = tuple(names) if names else tuple("g%d" % i for i in range(n))
    mul = tuple(tuple(_vec(F, n, {mult_table[a][b]: 1}) for b in range(n)) for a in range(n))
    return AlgebraPresentation(F, names, mul, _vec(F, n, {e: 1}), _vec(F, n, {e: 1}), name)


def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def build_cyclic(n: int, field=QQ) -> AlgebraPresentation:
    if n < 1:
        raise InputError("cyclic group order must be positive")
    if n == 2:
        names = ("1", "x")
    else:
        names = tuple(["1", "g"] + ["g^%d" % j for j in range(2, n)])
    name = "group:Z2" if n == 2 else "group:Zn:%d" % n
    return build_group(cyclic_table(n), field, names, name)


S3_NAMES = ("e", "x", "y", "xy", "yx", "xyx")


def s3_table():
    """S3 in the fixed order (e, x, y, xy, yx, xyx), x = (0 1), y = (1 2)."""
    def mul(p, q):
        return tuple(p[q[i]] for i in range(3))

    e, x, y = (0, 1, 2), (1, 0, 2), (0, 2, 1)
    elems = [e, x, y, mul(x, y), mul(y, x), mul(mul(x, y), x)]
    index = {p: i for i, p in enumerate(elems)}
    return [[index[mul(a, b)] for b in elems] for a in elems]


def build_s3(field=QQ) -> AlgebraPresentation:
    return build_group(s3_table(), field, S3_NAMES, "group:S3")


def build_s3_alt(field=QQ) -> AlgebraPresentation:
    """kS3 with the counit eps(xyx) = 1, zero elsewhere."""
    pres = build_group(s3_table(), field, S3_NAMES, "s3alt")
    return replace(pres, counit=_vec(field, 6, {5: 1}))


def build_qpoly(a_val) -> AlgebraPresentation:
    """k<x,y>/(x^2, y^2, yx - q xy), q = -A^-2, eps(xy) = iA, over Q(i)."""
    F = QQi
    A = F(a_val)
    if not A:
        raise ZeroParameter("qpoly parameter must be nonzero")
    q = -(A * A).inverse()
    z = {}
    mul = [[_vec(F, 4, z) for _ in range(4)] for _ in range(4)]
    for b in range(4):
        mul[0][b] = _vec(F, 4, {b: 1})
        mul[b][0] = _vec(F, 4, {b: 1})
    mul[1][2] = _vec(F, 4, {3: 1})
    mul[2][1] = _vec(F, 4, {3: q})
    counit = _vec(F, 4, {3: GaussianRational(0, 1) * A})
    name = "qpoly:%s" % F.format(A)
    return AlgebraPresentation(F, ("1", "x", "y", "xy"), tuple(map(tuple, mul)),
                               _vec(F, 4, {0: 1}), counit, name)


def trace_form(pres: AlgebraPresentation) -> AlgebraPresentation:
    """Replace the counit by eps(a) = trace of left multiplication by a."""
    F, d = pres.field, pres.dim
    counit = tuple(sum((F(pres.mul[a][b][b]) for b in range(d)), F.zero) for a in range(d))
    if not any(counit):
        raise DegeneratePairing("trace form vanishes identically")
    out = replace(pres, counit=counit, name=pres.name + "+trace")
    beta_rows = []
    for a in range(d):
        row = {}
        for b in range(d):
            v = sum((F(pres.mul[a][b][c]) * counit[c] for c in range(d)), F.zero)
            if v:
                row[b] = v
        beta_rows.append(row)
    if matrix_rank(F, beta_rows, d) < d:
        raise DegeneratePairing("trace form is degenerate (algebra not semisimple)")
    return out


BUILTIN_FORMS = ("complex", "poly:<n>", "group:Z2", "group:Zn:<n>", "group:S3", "s3alt", "qpoly:<scalar>")


def _positive_int(text, what):
    if not text.isdigit() or int(text) < 1:
        raise InputError("%s must be a positive integer, got %r" % (what, text))
    return int(text)


def builtin(spec: str, field=None) -> AlgebraPresentation:
    """Resolve a builtin name such as ``poly:3`` or ``qpoly:(1+i)``.

    ``field`` overrides the base field for the polynomial and group
    families; the complex numbers and qpoly have a fixed field.
    """
    kind, _, arg = spec.partition(":")
    if kind in ("complex", "qpoly"):
        if field is not None and field != (QQ if kind == "complex" else QQi):
            raise InputError("%s has a fixed field (%s)" % (kind, "Q" if kind == "complex" else "Qi"))
        if kind == "complex":
            if arg:
                raise InputError("complex takes no parameter")
            return build_complex()
        if not arg:
            raise InputError("qpoly needs a parameter, e.g. qpoly:i")
        return replace(build_qpoly(QQi.parse(arg)), name=spec)
    F = QQ if field is None else field
    if kind == "poly":
        return build_poly(_positive_int(arg, "poly degree"), F)
    if kind == "group":
        if arg == "Z2":
            return build_cyclic(2, F)
        if arg == "S3":
            return build_s3(F)
        if arg.startswith("Zn:"):
            return build_cyclic(_positive_int(arg[3:], "group order"), F)
        raise InputError("unknown group %r (expected Z2, Zn:<n> or S3)" % arg)
    if kind == "s3alt" and not arg:
        return build_s3_alt(F)
    raise InputError("unknown builtin %r (expected one of %s)" % (spec, ", ".join(BUILTIN_FORMS)))
