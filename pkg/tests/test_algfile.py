import pytest

from frobcoh import algfile as af
from frobcoh.errors import DuplicateMulLine, ParseError, UnknownBasisName
from frobcoh.frobenius import builtin, validate

HEADER = "field Q\nbasis 1 x\nunit 1\n"


def _core(p):
    return (p.field, p.basis_names, p.mul, p.unit, p.counit)


def test_shipped_files_roundtrip():
    files = af.shipped_files()
    assert {f.stem for f in files} >= {"z2", "complex", "poly2", "qpoly_i"}
    for f in files:
        text = f.read_text()
        assert af.format_algebra(af.parse_algebra(text)) == af.canonicalize(text) == text
        validate(af.load(f))


def test_z2_matches_builder():
    p = af.load(af.DATA_DIR / "z2.frob")
    assert _core(p) == _core(builtin("group:Z2"))
    assert p.name == "file:z2"


def test_qpoly_file_matches_builder():
    assert _core(af.load(af.DATA_DIR / "qpoly_i.frob")) == _core(builtin("qpoly:i"))


def test_comments_defaults_and_coefficients():
    text = ("# Z2 written by hand\nfield Q   # rationals\nbasis 1 x\nunit 1\n"
            "mul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\nmul x x = 1\ncounit 1 = 1\n")
    p = af.parse_algebra(text)
    assert _core(p) == _core(builtin("group:Z2"))
    q = af.parse_algebra(HEADER + "mul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\nmul x x = 3/2 * 1 + -1 * x + x\ncounit x = 1\n")
    assert q.mul[1][1] == (pytest.approx(1.5), 0) or q.mul[1][1] == (q.field.parse("3/2"), 0)
    assert q.counit == (0, 1)


def test_gaussian_coefficients_and_name_i():
    text = ("field Qi\nbasis 1 i\nunit 1\nmul 1 1 = 1\nmul 1 i = i\nmul i 1 = i\n"
            "mul i i = (1/2-1/2i) * 1 + i * i\ncounit 1 = 1\n")
    p = af.parse_algebra(text)
    F = p.field
    assert p.mul[1][1] == (F.parse("(1/2-1/2i)"), F.parse("i"))
    assert af.parse_algebra(af.format_algebra(p)) == p


def test_missing_pair_listed():
    with pytest.raises(ParseError) as info:
        af.parse_algebra(HEADER + "mul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\n")
    assert "x x" in str(info.value)


def test_duplicate_mul():
    with pytest.raises(DuplicateMulLine) as info:
        af.parse_algebra(HEADER + "mul 1 1 = 1\nmul 1 1 = x\n")
    assert info.value.line == 5


def test_unknown_name():
    with pytest.raises(UnknownBasisName) as info:
        af.parse_algebra(HEADER + "mul 1 1 = 2 * y\n")
    assert (info.value.line, info.value.column) == (4, 15)


@pytest.mark.parametrize("text,line", [
    ("field GF 4\nbasis a\n", 1),
    ("field R\n", 1),
    ("basis 1 x\n", 1),
    (HEADER + "mul 1 1 1\n", 4),
    (HEADER + "mul 1 1 = 1/0 * x\n", 4),
    (HEADER + "mul 1 1 = i * x\n", 4),
    (HEADER + "frobnicate\n", 4),
    ("field Q\nbasis 1 1\n", 2),
])
def test_parse_errors_have_positions(text, line):
    with pytest.raises(ParseError) as info:
        af.parse_algebra(text)
    assert info.value.line == line and info.value.column >= 1
