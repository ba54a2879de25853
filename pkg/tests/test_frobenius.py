from dataclasses import replace

import pytest
import sympy

from frobcoh.errors import (
    DegeneratePairing, InputError, NotAGroup, NotAssociative, UnitLawFails, ZeroParameter,
)
from frobcoh.frobenius import (
    AlgebraPresentation, build_complex, build_group, build_poly, build_qpoly, builtin, check_group_table,
    cyclic_table, trace_form, validate,
)
from frobcoh.scalars import GF, QQ, QQi
from frobcoh.tensorlin import compose


def vec(alg, text_terms):
    """{'1': 2, 'x': -1} -> coordinate vector."""
    F = alg.field
    return [F(text_terms.get(n, 0)) for n in alg.basis_names]


def tensor_terms(alg, vector):
    names = alg.basis_names
    d = alg.dim
    return {(names[k // d], names[k % d]): v for k, v in enumerate(vector) if v}


def test_complex_structure(alg):
    a = alg("complex")
    B = [[a.beta.entry(0, 2 * r + c) for c in range(2)] for r in range(2)]
    assert B == [[1, 0], [0, -1]]
    assert tensor_terms(a, a.gamma.column(0)) == {("1", "1"): 1, ("i", "i"): -1}
    assert tensor_terms(a, a.delta.column(1)) == {("1", "i"): 1, ("i", "1"): 1}
    assert a.epsilon.apply(a.unit_vector()) == [1]
    assert compose(a.mu, a.delta).apply(a.basis_vector(1)) == [0, 2]
    assert (a.delta0, a.scalar_handle) == (2, 2)


def test_poly_comultiplication(alg):
    p2 = alg("poly:2")
    assert tensor_terms(p2, p2.gamma.column(0)) == {("1", "x"): 1, ("x", "1"): 1}
    assert tensor_terms(p2, p2.delta.column(1)) == {("x", "x"): 1}
    p3 = alg("poly:3")
    assert tensor_terms(p3, p3.delta.column(0)) == {("1", "x^2"): 1, ("x", "x"): 1, ("x^2", "1"): 1}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_poly_handle(alg, n):
    a = alg("poly:%d" % n)
    want = [0] * n
    want[n - 1] = n
    assert list(a.handle_element) == want
    assert a.scalar_handle is None


def test_poly_gf2_gram_oracle():
    # Gram matrix eps(x^a x^b) directly from the presentation: antidiag(1, 1)
    p = build_poly(2, GF(2))
    gram = [[sum(p.mul[a][b][c] * p.counit[c] for c in range(2)) for b in range(2)] for a in range(2)]
    assert gram == [[0, 1], [1, 0]]
    a = validate(p)
    assert list(a.handle_element) == [0, 0]
    assert a.scalar_handle == 0


def test_groups(alg):
    z2 = alg("group:Z2")
    assert compose(z2.mu, z2.delta) == z2.identity().scale(2)
    assert alg("group:S3").delta0 == 6
    assert alg("group:S3").symmetric and not alg("group:S3").commutative


def test_s3alt_gram_oracle(alg):
    a = alg("s3alt")
    G = sympy.Matrix(6, 6, lambda r, c: sympy.Rational(a.beta.entry(0, 6 * r + c)))
    assert G.rank() == 6
    names = a.basis_names
    assert {names[k]: v for k, v in enumerate(a.handle_element) if v} == {"x": 2, "y": 2, "xyx": 2}
    assert not a.symmetric


def test_qpoly_formulas(alg):
    a = alg("qpoly:i")
    A = QQi.parse("i")
    iA, inv = QQi.parse("i") * A, QQi.parse("i") * A.inverse()
    want = {("x", "y"): iA, ("y", "x"): -inv, ("xy", "1"): -inv, ("1", "xy"): -inv}
    assert tensor_terms(a, a.gamma.column(0)) == want
    assert tensor_terms(a, a.delta.column(3)) == {("xy", "xy"): -inv}
    assert list(a.handle_element) == [0, 0, 0, -4]


def test_qpoly_general_parameter():
    A = QQi.parse("2")
    a = validate(build_qpoly(A))
    coeff = QQi.parse("i") * A.inverse() * (A - A.inverse()) ** 2
    assert list(a.handle_element) == [0, 0, 0, coeff]
    with pytest.raises(ZeroParameter):
        build_qpoly(QQi.zero)


def test_trace_form():
    p = trace_form(build_group(cyclic_table(2), QQ, ("1", "x")))
    assert p.counit == (2, 0)
    validate(p)
    with pytest.raises(DegeneratePairing):
        trace_form(build_group(cyclic_table(2), GF(2), ("1", "x")))
    validate(trace_form(builtin("group:S3")))


def test_validation_errors():
    c = build_complex()
    F = QQ
    # 1, a, b with aa = b, ab = 0, ba = a: (aa)a = a but a(aa) = 0
    e = lambda *v: tuple(F(x) for x in v)  # noqa: E731
    mul = ((e(1, 0, 0), e(0, 1, 0), e(0, 0, 1)),
           (e(0, 1, 0), e(0, 0, 1), e(0, 0, 0)),
           (e(0, 0, 1), e(0, 1, 0), e(0, 0, 0)))
    bad = AlgebraPresentation(F, ("1", "a", "b"), mul, e(1, 0, 0), e(0, 0, 1))
    with pytest.raises(NotAssociative) as info:
        validate(bad)
    assert info.value.witness == ("a", "a", "a")
    with pytest.raises(UnitLawFails):
        validate(replace(c, unit=(F(0), F(1))))
    with pytest.raises(DegeneratePairing):
        validate(replace(c, counit=(F(0), F(0))))
    with pytest.raises(NotAGroup):
        check_group_table([[0, 1], [1, 1]])


def test_builtin_resolution():
    assert builtin("group:Zn:3").dim == 3
    with pytest.raises(InputError):
        builtin("complex", GF(3))
    with pytest.raises(InputError):
        builtin("poly:0")
    with pytest.raises(InputError):
        builtin("nonsense")
