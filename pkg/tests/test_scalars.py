from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from frobcoh.errors import DivisionByZero, FieldMismatch, InputError, NoSquareRoot, ParseError
from frobcoh.scalars import GF, QQ, QQi, GaussianRational, field_from_name, scan_scalar

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
gaussians = st.builds(GaussianRational, rationals, rationals)
residues = st.integers(0, 10**6).map(GF(101))


@pytest.mark.parametrize("strategy", [rationals, gaussians, residues], ids=["Q", "Qi", "GF101"])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_field_axioms(strategy, data):
    a, b, c = (data.draw(strategy) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0 * a
    if b:
        assert (a / b) * b == a


@settings(max_examples=100, deadline=None)
@given(gaussians)
def test_gaussian_roundtrip(x):
    assert QQi.parse(QQi.format(x)) == x


@settings(max_examples=100, deadline=None)
@given(rationals)
def test_rational_roundtrip(x):
    assert QQ.parse(QQ.format(x)) == x


def test_parse_forms():
    assert QQi.parse("3/4") == GaussianRational(Fraction(3, 4))
    assert QQi.parse("2i") == GaussianRational(0, 2)
    assert QQi.parse("-i") == GaussianRational(0, -1)
    assert QQi.parse("(1/2-1/2i)") == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert GF(7).parse("3/2") == GF(7)(5)
    assert QQi.format(GaussianRational(Fraction(1, 2), Fraction(-1, 2))) == "(1/2-1/2i)"


@pytest.mark.parametrize("text,field", [("1/0", QQ), ("i", QQ), ("abc", QQ), ("1/7", GF(7)), ("1 2", QQ)])
def test_parse_errors(text, field):
    with pytest.raises(ParseError):
        field.parse(text)


def test_scan_scalar_position():
    re_, im, end = scan_scalar("x = (1+2i) * y", 4)
    assert (re_, im, end) == (1, 2, 10)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatch):
        QQ(QQi.parse("i"))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        GF(5)(3) / GF(5)(0)
    with pytest.raises(ZeroDivisionError):
        QQi.one / QQi.zero


def test_gf_needs_prime():
    with pytest.raises(InputError):
        GF(4)
    with pytest.raises(InputError):
        GF(2**31 + 11)


def test_sqrt():
    assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(NoSquareRoot):
        QQ.sqrt(2)
    with pytest.raises(NoSquareRoot):
        QQ.sqrt(-1)
    assert QQi.sqrt(-1) == GaussianRational(0, 1)
    r = QQi.sqrt(QQi.parse("2i"))
    assert r * r == QQi.parse("2i") and r == GaussianRational(1, 1)
    assert GF(13).sqrt(10) == GF(13)(6)  # 6^2 = 36 = 10, smaller root
    with pytest.raises(NoSquareRoot):
        GF(13).sqrt(2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10**6), st.sampled_from([3, 7, 13, 101, 65537, 2147483647]))
def test_sqrt_gf_matches_bruteforce_residue(x, p):
    F = GF(p)
    a = F(x) * F(x)
    r = F.sqrt(a)
    assert r * r == a
    assert r.v <= p - r.v


def test_field_names():
    assert field_from_name("GF 2") == GF(2) == field_from_name("GF:2") == field_from_name("GF2")
    assert field_from_name("Qi") is QQi
    with pytest.raises(ParseError):
        field_from_name("R")
