"""The acceptance suite, shared by ``frobcoh selftest`` and the test-suite.

Each criterion returns a ``Criterion`` holding named checks.  A check
records what was expected, what was computed and whether they agree.
Nothing here is tolerant: every comparison is exact.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field

from . import cohomology as coh
from . import deformation as df
from . import yangbaxter as yb
from .errors import FrobError
from .frobenius import builtin, tensor_vectors, validate
from .scalars import GF, QQ, QQi
from .tensorlin import LinMap, compose, kernel, matrix_kernel, rank, tensor

ALL_BUILTINS = ("complex", "poly:2", "poly:3", "group:Z2", "group:S3", "s3alt", "qpoly:i")
D2_BUILTINS = (("complex", None), ("poly:2", None), ("group:Z2", None),
               ("poly:2", GF(2)), ("group:Z2", GF(2)))
DEEP_BUILTINS = (("qpoly:i", None), ("s3alt", None))


@dataclass
class Check:
    name: str
    ok: bool
    expected: object = None
    got: object = None
    note: str = ""


@dataclass
class Criterion:
    number: int
    title: str
    checks: list = dc_field(default_factory=list)
    extra: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    def add(self, name, ok, expected=None, got=None, note=""):
        self.checks.append(Check(name, bool(ok), expected, got, note))

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = "criterion %d [%s] %s (%d checks, %.1fs)" % (
            self.number, status, self.title, len(self.checks), self.seconds)
        bad = self.failures()
        if bad:
            text += "; failing: " + ", ".join(c.name for c in bad[:4])
            if len(bad) > 4:
                text += ", ..."
        return text

    def as_dict(self):
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "checks": [{"name": c.name, "ok": c.ok, "expected": _plain(c.expected),
                        "got": _plain(c.got), "note": c.note} for c in self.checks],
            "extra": _plain(self.extra),
        }


def _plain(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


_CACHE = {}


def algebra(spec, field=None):
    key = (spec, None if field is None else str(field))
    if key not in _CACHE:
        _CACHE[key] = validate(builtin(spec, field))
    return _CACHE[key]


def _label(spec, field):
    return spec if field is None else "%s/%s" % (spec, field)


def _guard(crit, name, fn):
    """Run fn; an exception becomes a failed check instead of aborting."""
    try:
        return fn()
    except (FrobError, AssertionError) as e:
        witness = getattr(e, "witness", None)
        note = "%s: %s" % (type(e).__name__, e)
        if witness is not None:
            note += " (witness: row %s, col %s, lhs %s, rhs %s)" % tuple(map(str, witness))
        crit.add(name, False, note=note)
        return None


# -- 1 ------------------------------------------------------------------------

def criterion_1():
    crit = Criterion(1, "axiom suite on all builtins")
    for spec in ALL_BUILTINS:
        alg = _guard(crit, spec, lambda: validate(builtin(spec)))
        if alg is not None:
            _CACHE[(spec, None)] = alg
            crit.add(spec, True, note="symmetric=%s commutative=%s" % (alg.symmetric, alg.commutative))
    return crit


# -- 2 ------------------------------------------------------------------------

def _handle_text(alg):
    return alg.format_element(alg.handle_element)


def criterion_2():
    crit = Criterion(2, "handle constants")
    for spec in ("complex", "group:Z2"):
        alg = algebra(spec)
        F = alg.field
        got = (F.format(alg.delta0), _handle_text(alg),
               None if alg.scalar_handle is None else F.format(alg.scalar_handle))
        crit.add(spec, got == ("2", "2 * 1", "2"), ("2", "2 * 1", "2"), got)
    for n in (2, 3, 4):
        alg = algebra("poly:%d" % n)
        F = alg.field
        want = [F.zero] * n
        want[n - 1] = F(n)
        crit.add("poly:%d" % n, list(alg.handle_element) == want and alg.scalar_handle is None,
                 "%d * x^%d" % (n, n - 1) if n > 2 else "2 * x", _handle_text(alg))
    alg = algebra("s3alt")
    F = alg.field
    names = alg.basis_names
    want = [F.zero] * 6
    for nm in ("x", "y", "xyx"):
        want[names.index(nm)] = F(2)
    crit.add("s3alt", list(alg.handle_element) == want, "2 * x + 2 * y + 2 * xyx", _handle_text(alg))
    alg = algebra("qpoly:i")
    F = alg.field
    A = QQi.parse("i")
    coeff = QQi.parse("i") * A.inverse() * (A - A.inverse()) ** 2
    want = [F.zero] * 4
    want[3] = coeff
    crit.add("qpoly:i", list(alg.handle_element) == want and coeff == F(-4),
             "%s * xy" % F.format(coeff), _handle_text(alg))
    return crit


# -- 3 ------------------------------------------------------------------------

COHOMOLOGY_TARGETS = (
    ("complex", None, (0, 6, 4)),
    ("poly:2", None, (0, 6, 4)),
    ("poly:2", GF(2), (1, 6, 5)),
    ("group:Z2", None, (0, 6, 4)),
    ("group:Z2", GF(2), (1, 6, 5)),
)


def criterion_3():
    crit = Criterion(3, "cohomology regression (H1, Z2, H2)")
    for spec, field, want in COHOMOLOGY_TARGETS:
        alg = algebra(spec, field)
        reports = [coh.cohomology_dims(alg, 2, v) for v in (1, 2)]
        got = tuple((r.h[1], r.z[2], r.h[2]) for r in reports)
        label = _label(spec, field)
        crit.add(label, got[0] == want, want, got[0], note="B2=%d" % reports[0].b[2])
        crit.add(label + " variants agree", got[0] == got[1], got[0], got[1])
    return crit


# -- 4 ------------------------------------------------------------------------

def criterion_4(deep=False, samples=3, seed=4):
    crit = Criterion(4, "chain identities" + (" (deep)" if deep else ""))
    targets = list(D2_BUILTINS) + (list(DEEP_BUILTINS) if deep else [])
    rng = random.Random(seed)
    reports = {}
    for spec, field in targets:
        alg = algebra(spec, field)
        label = _label(spec, field)
        for outer, inner, variant, name in ((2, 1, 1, "D2(1)D1=0"), (2, 1, 2, "D2(2)D1=0"),
                                            (3, 2, 1, "D3D2(1)=0")):
            ok, where = coh.chain_identity(alg, outer, inner, variant)
            crit.add("%s %s" % (label, name), ok, "0", "0" if ok else "nonzero at column %s" % where)
        if alg.dim == 2:
            sample = [coh.random_cochain(alg, 3, rng) for _ in range(samples)]
            rep = coh.degree4_component_report(alg, sample)
            reports[label] = rep
            # passes as stated, or the discrepancy goes into the structured report and
            # the sign-corrected form is shown to vanish
            stated, corrected = rep["d42_as_stated"]["holds"], rep["d42_corrected"]["holds"]
            crit.add("%s d42 component" % label, stated or corrected,
                     note="as stated holds=%s, corrected holds=%s"
                     % (stated, corrected))
    crit.extra["degree4"] = reports
    return crit


# -- 5 ------------------------------------------------------------------------

def criterion_5():
    crit = Criterion(5, "Yang-Baxter suite")
    for spec in ALL_BUILTINS:
        alg = algebra(spec)
        kinds = [("delta-mu", yb.r_delta_mu)]
        if alg.symmetric:
            kinds += [("tau-delta-mu", yb.r_tau_delta_mu), ("sandwich", yb.r_sandwich)]
        for kind, make in kinds:
            name = "%s %s" % (spec, kind)
            R = _guard(crit, name, lambda: make(alg))
            if R is not None:
                crit.add(name, True)
    F = QQ
    for spec in ("complex", "group:Z2"):
        alg = algebra(spec)
        sols = _guard(crit, spec + " case i", lambda: yb.solve_skein_case_i(alg))
        if sols is None:
            continue
        coeffs = [(s.R.coefficients[:2], s.inverse.coefficients[:2]) for s in sols]
        want = [((F(1), F(-1)), (F(1), F(-1)))]
        sq = all(compose(s.R.map, s.R.map) == alg.identity(2) for s in sols)
        ok = coeffs == want and all(s.ybe.ok and s.inverse_ok for s in sols) and sq
        crit.add(spec + " case i", ok, "(1,-1) inverse (1,-1), R^2 = I",
                 ["%s inverse %s" % (s.R.describe(), s.inverse.describe()) for s in sols])
    alg = algebra("group:Z2")
    sol = _guard(crit, "group:Z2 case ii", lambda: yb.solve_skein_case_ii(alg, 1, 1))
    if sol is not None:
        got = sol.inverse.coefficients[2:]
        ok = got == (F.parse("-1/3"), F(1)) and sol.ybe.ok and sol.inverse_ok
        crit.add("group:Z2 case ii", ok, "(C',T') = (-1/3, 1)", "(%s, %s)" % got)
    return crit


# -- 6 ------------------------------------------------------------------------

def _closed_form_delta1(alg, c):
    g = lambda name: df.coordinate(alg, c, name)  # noqa: E731
    F = alg.field
    if alg.name == "complex":
        return df.DualScalar(F(2), -2 * (g("lambda^1_{i,i}") + g("gamma_1^{i,i}")))
    return df.DualScalar(F(2), 2 * (g("lambda^1_{x,x}") + g("gamma_1^{x,x}")))


def criterion_6():
    crit = Criterion(6, "deformation suite")
    for spec in ("complex", "group:Z2"):
        alg = algebra(spec)
        space = df.deformation_constraint_space(alg)
        crit.add(spec + " dim", space.dim == 5, 5, space.dim)
        ybe_ok = delta_ok = cr4_ok = True
        for c in space.cochains():
            _, ok = df.deformed_r(alg, c, None, 1, 1)
            ybe_ok &= ok
            delta_ok &= df.delta1_of(alg, c, None) == _closed_form_delta1(alg, c)
            if spec == "complex":
                g = lambda name: df.coordinate(alg, c, name)  # noqa: E731
                cr4_ok &= 3 * g("gamma_i^{1,1}") + 2 * g("lambda^i_{i,i}") + g("gamma_i^{i,i}") == 0
        crit.add(spec + " basis YBE mod t^2", ybe_ok)
        crit.add(spec + " delta1 closed form", delta_ok)
        if spec == "complex":
            crit.add("complex CR4", cr4_ok)
    return crit


# -- 7 ------------------------------------------------------------------------

def _random_map(F, d, m, n, rng, density=0.6):
    flat = {k: F.random(rng) for k in range(d ** (m + n)) if rng.random() < density}
    return LinMap.from_flat(F, d, m, n, flat)


def _random_element(space, F, rng):
    vec = [F.zero] * space.ambient_dim
    for b in space.basis:
        c = F.random(rng)
        for k, v in enumerate(b):
            if v:
                vec[k] = vec[k] + c * v
    return vec


def criterion_7(cases=200, seed=7):
    crit = Criterion(7, "property suites (%d cases each)" % cases)
    rng = random.Random(seed)
    algs = [algebra(s, f) for s, f in D2_BUILTINS]
    pick = lambda: algs[rng.randrange(len(algs))]  # noqa: E731

    ok = True
    for _ in range(cases):
        alg = pick()
        c = coh.random_cochain(alg, 2, rng, density=rng.choice((0.2, 0.6, 1.0)))
        ob = df.primary_obstruction(alg, c, None)
        ok &= ob.cochain(1) == coh.d2(alg, c, 1) and ob.cochain(2) == coh.d2(alg, c, 2)
    crit.add("obstruction = D2", ok)

    ok = True
    for _ in range(cases):
        alg = pick()
        c = coh.random_cochain(alg, 2, rng, density=rng.choice((0.2, 0.6)))
        ok &= coh.d3(alg, df.primary_obstruction(alg, c, None).cochain(1)).is_zero()
    crit.add("D3 of obstruction = 0", ok)

    ok = True
    both = {}
    for alg in algs:
        z1 = coh.cocycle_space(alg, 2, 1)
        z2 = coh.cocycle_space(alg, 2, 2)
        both[alg.name, str(alg.field)] = (z1, z2)
    hits = [0, 0]
    for k in range(cases):
        alg = pick()
        z1, z2 = both[alg.name, str(alg.field)]
        F = alg.field
        vec = _random_element(z1, F, rng)
        if k % 2:
            j = rng.randrange(len(vec))
            vec[j] = vec[j] + F.random(rng)
        c = coh.cochain_from_vector(alg, 2, vec)
        is_cocycle = tuple(vec) in z1 and tuple(vec) in z2
        mu_t, de_t = df.deformed_structure(alg, c[1], c[2])
        hits[is_cocycle] += 1
        ok &= df.check_frobenius_mod_t2(mu_t, de_t) == is_cocycle
    crit.add("cocycle <=> Frobenius mod t^2", ok and all(hits), note="cocycles=%d others=%d" % (hits[1], hits[0]))

    ok = True
    for _ in range(cases):
        alg = pick()
        F, d = alg.field, alg.dim
        h = _random_map(F, d, 1, 1, rng)
        d11h = coh.d11(alg, h)
        one = alg.unit_vector()
        h1 = h.apply(one)
        ok &= d11h.apply(_tv(F, one, one)) == h1
        for a in range(d):
            x = alg.basis_vector(a)
            want = alg.multiply(h1, x)
            ok &= d11h.apply(_tv(F, one, x)) == want
            ok &= d11h.apply(_tv(F, x, one)) == want
    crit.add("d1lem (i),(ii)", ok)

    ok = True
    for field, alpha_zero in ((None, True), (GF(2), False)):
        alg = algebra("poly:2", field)
        F = alg.field
        z = coh.cocycle_space(alg, 1)
        x = alg.basis_vector(1)
        for _ in range(cases // 2):
            h = coh.cochain_from_vector(alg, 1, _random_element(z, F, rng))[1]
            hx = h.apply(x)
            ok &= not hx[1] and (F(2) * hx[0] == 0)
            if alpha_zero:
                ok &= not hx[0]
    crit.add("d1lem (iii)", ok)

    ok = True
    comm = [a for a in algs if a.commutative]
    kers = {}
    for alg in comm:
        kers[alg.name, str(alg.field)] = _d21_kernel(alg)
    for _ in range(cases):
        alg = comm[rng.randrange(len(comm))]
        F = alg.field
        phi = LinMap.from_flat(F, alg.dim, 2, 1, dict(enumerate(_random_element(kers[alg.name, str(alg.field)], F, rng))))
        ok &= coh.d21(alg, phi).is_zero()
        one = alg.unit_vector()
        p11 = phi.apply(_tv(F, one, one))
        for a in range(alg.dim):
            x = alg.basis_vector(a)
            xx = alg.multiply(x, x)
            ok &= alg.multiply(x, p11) == phi.apply(_tv(F, one, x)) == phi.apply(_tv(F, x, one))
            ok &= phi.apply(_tv(F, xx, x)) == phi.apply(_tv(F, x, xx))
            ok &= phi.apply(_tv(F, one, xx)) == alg.multiply(x, phi.apply(_tv(F, one, x)))
    crit.add("d2lem", ok)

    ok = True
    for _ in range(cases):
        F = rng.choice((QQ, GF(2), GF(3), QQi))
        d = rng.choice((2, 3))
        m, n = rng.choice(((1, 1), (1, 2), (2, 1), (2, 2)))
        f = _random_map(F, d, m, n, rng, density=rng.choice((0.2, 0.5, 0.9)))
        ok &= rank(f) + kernel(f).dim == f.ncols
    crit.add("rank-nullity", ok)

    ok = True
    for _ in range(cases):
        F = rng.choice((QQ, GF(5), QQi))
        d = 2
        f, g = _random_map(F, d, 1, 2, rng), _random_map(F, d, 1, 2, rng)
        h, k = _random_map(F, d, 2, 1, rng), _random_map(F, d, 1, 1, rng)
        ok &= compose(tensor(f, g), tensor(h, k)) == tensor(compose(f, h), compose(g, k))
    crit.add("interchange law", ok)
    return crit


def _tv(F, *vectors):
    return tensor_vectors(F, *vectors)


def _d21_kernel(alg):
    F, d = alg.field, alg.dim
    n = d ** 3
    cols = []
    for k in range(n):
        phi = LinMap.from_flat(F, d, 2, 1, {k: F.one})
        cols.append(coh.d21(alg, phi).sparse_flat())
    rows = {}
    for j, col in enumerate(cols):
        for r, v in col.items():
            rows.setdefault(r, {})[j] = v
    return matrix_kernel(F, list(rows.values()), n)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7)


def run(deep=False, only=None):
    out = []
    for k, fn in enumerate(CRITERIA, start=1):
        if only and k not in only:
            continue
        t = time.time()
        crit = fn(deep=deep) if fn is criterion_4 else fn()
        crit.seconds = time.time() - t
        out.append(crit)
    return out
