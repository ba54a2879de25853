"""Line-oriented algebra definition files.

    # comments run to end of line
    field Q | field Qi | field GF <p>
    basis <name>+
    unit <lincomb>
    mul <name> <name> = <lincomb>      one line per ordered pair
    counit <name> = <scalar>           omitted names default to 0

    lincomb := 0 | term (+ term)*
    term    := [<scalar> *] <name>
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .errors import DuplicateMulLine, InputError, ParseError, UnknownBasisName
from .frobenius import AlgebraPresentation
from .scalars import PrimeField, QQ, QQi, scan_scalar

_NAME_RE = re.compile(r"[^\s=+*#()]+")
_WS_RE = re.compile(r"[ \t]*")
_COEFF_RE = re.compile(r"\([^)]*\)|[^\s*+]+")
DATA_DIR = Path(__file__).parent / "data"


@dataclass
class AlgebraFile:
    presentation: AlgebraPresentation
    # (keyword, key) -> (line, column) of the defining statement
    positions: dict = dc_field(default_factory=dict)


class _Line:
    def __init__(self, text, lineno):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def error(self, message, expected=None, pos=None):
        col = (self.pos if pos is None else pos) + 1
        return ParseError(message, line=self.lineno, column=col, expected=expected)

    def skip_ws(self):
        self.pos = _WS_RE.match(self.text, self.pos).end()

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect_end(self):
        if not self.at_end():
            raise self.error("unexpected %r" % self.text[self.pos:], expected="end of line")

    def name(self, what="basis name"):
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            raise self.error("missing %s" % what, expected=what)
        self.pos = m.end()
        return m.group(), m.start()

    def literal(self, ch):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            raise self.error("missing %r" % ch, expected="'%s'" % ch)
        self.pos += len(ch)

    def scalar(self, field):
        self.skip_ws()
        start = self.pos
        try:
            re_, im, end = scan_scalar(self.text, start)
        except ParseError as e:
            raise self.error("bad scalar", expected=e.expected) from None
        if end < len(self.text) and (self.text[end].isalnum() or self.text[end] in "_^'"):
            raise self.error("bad scalar", expected="rational, rational 'i' or (rational+-rational 'i')")
        self.pos = end
        try:
            return field._from_parts(re_, im, start)
        except ParseError as e:
            raise ParseError(e.message, line=self.lineno,
                             column=start + 1, expected=e.expected) from None

    def term(self, field, index):
        self.skip_ws()
        start = self.pos
        coeff = field.one
        try:
            re_, im, end = scan_scalar(self.text, start)
        except ParseError:
            end = None
            tok = _COEFF_RE.match(self.text, start)
            if tok and self.text.startswith("*", _WS_RE.match(self.text, tok.end()).end()):
                self.scalar(field)  # raises with the scalar's own diagnostic
        if end is not None:
            after = _WS_RE.match(self.text, end).end()
            if self.text.startswith("*", after):
                coeff = self.scalar(field)
                self.literal("*")
        name, npos = self.name()
        if name not in index:
            raise UnknownBasisName("unknown basis name %r" % name, line=self.lineno,
                                   column=npos + 1, expected="one of " + " ".join(index))
        return coeff, index[name]

    def lincomb(self, field, index):
        d = len(index)
        vec = [field.zero] * d
        self.skip_ws()
        if self.text.startswith("0", self.pos):
            m = _NAME_RE.match(self.text, self.pos)
            if m.group() == "0":
                self.pos = m.end()
                return tuple(vec)
        while True:
            c, k = self.term(field, index)
            vec[k] = vec[k] + c
            self.skip_ws()
            if not self.text.startswith("+", self.pos):
                return tuple(vec)
            self.pos += 1


def _strip_comment(line):
    k = line.find("#")
    return line if k < 0 else line[:k]


def _parse_field(ln):
    word, pos = ln.name("field name")
    if word == "Q":
        return QQ
    if word == "Qi":
        return QQi
    if word == "GF":
        p_text, p_pos = ln.name("prime")
        if not p_text.isdigit():
            raise ln.error("bad characteristic %r" % p_text, expected="a prime", pos=p_pos)
        try:
            return PrimeField(int(p_text))
        except InputError:
            raise ln.error("%s is not a prime below 2^31" % p_text, expected="a prime", pos=p_pos) from None
    raise ln.error("unknown field %r" % word, expected="Q, Qi or GF <p>", pos=pos)


def parse_algebra_file(text, name="file"):
    """Parse definition text into an AlgebraFile (presentation + positions)."""
    field = None
    names = None
    index = {}
    unit = None
    mul = {}
    counit = {}
    positions = {}

    def need(what, ln):
        if field is None:
            raise ln.error("'%s' before 'field'" % what, expected="field line first", pos=0)
        if names is None and what != "basis":
            raise ln.error("'%s' before 'basis'" % what, expected="basis line first", pos=0)

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        ln = _Line(_strip_comment(raw).rstrip(), lineno)
        if ln.at_end():
            continue
        kw, kpos = ln.name("keyword")
        if kw == "field":
            if field is not None:
                raise ln.error("second 'field' line", pos=kpos)
            field = _parse_field(ln)
            ln.expect_end()
            positions[("field", None)] = (lineno, kpos + 1)
        elif kw == "basis":
            need("basis", ln)
            if names is not None:
                raise ln.error("second 'basis' line", pos=kpos)
            names = []
            while not ln.at_end():
                nm, npos = ln.name()
                if nm == "0":
                    raise ln.error("'0' is reserved for the zero vector", pos=npos)
                if nm in index:
                    raise ln.error("duplicate basis name %r" % nm, pos=npos)
                index[nm] = len(names)
                names.append(nm)
            if not names:
                raise ln.error("empty basis", expected="at least one basis name")
            positions[("basis", None)] = (lineno, kpos + 1)
        elif kw == "unit":
            need("unit", ln)
            if unit is not None:
                raise ln.error("second 'unit' line", pos=kpos)
            unit = ln.lincomb(field, index)
            ln.expect_end()
            positions[("unit", None)] = (lineno, kpos + 1)
        elif kw == "mul":
            need("mul", ln)
            pair = []
            for _ in range(2):
                nm, npos = ln.name()
                if nm not in index:
                    raise UnknownBasisName("unknown basis name %r" % nm, line=lineno,
                                           column=npos + 1, expected="one of " + " ".join(names))
                pair.append(index[nm])
            pair = tuple(pair)
            if pair in mul:
                first = positions[("mul", pair)][0]
                raise DuplicateMulLine("second 'mul %s %s' line (first on line %d)"
                                       % (names[pair[0]], names[pair[1]], first),
                                       line=lineno, column=kpos + 1)
            ln.literal("=")
            mul[pair] = ln.lincomb(field, index)
            ln.expect_end()
            positions[("mul", pair)] = (lineno, kpos + 1)
        elif kw == "counit":
            need("counit", ln)
            nm, npos = ln.name()
            if nm not in index:
                raise UnknownBasisName("unknown basis name %r" % nm, line=lineno,
                                       column=npos + 1, expected="one of " + " ".join(names))
            k = index[nm]
            if k in counit:
                raise ln.error("second 'counit %s' line" % nm, pos=kpos)
            ln.literal("=")
            counit[k] = ln.scalar(field)
            ln.expect_end()
            positions[("counit", k)] = (lineno, kpos + 1)
        else:
            raise ln.error("unknown keyword %r" % kw, pos=kpos,
                           expected="field, basis, unit, mul or counit")

    end = len(lines) + 1
    if field is None:
        raise ParseError("no 'field' line", line=end, column=1, expected="field Q|Qi|GF <p>")
    if names is None:
        raise ParseError("no 'basis' line", line=end, column=1, expected="basis <name>+")
    if unit is None:
        raise ParseError("no 'unit' line", line=end, column=1, expected="unit <lincomb>")
    d = len(names)
    missing = [(a, b) for a in range(d) for b in range(d) if (a, b) not in mul]
    if missing:
        listed = ", ".join("%s %s" % (names[a], names[b]) for a, b in missing)
        raise ParseError("missing mul line(s) for: %s" % listed, line=end, column=1,
                         expected="mul %s %s = <lincomb>" % (names[missing[0][0]], names[missing[0][1]]))
    pres = AlgebraPresentation(
        field=field,
        basis_names=tuple(names),
        mul=tuple(tuple(mul[(a, b)] for b in range(d)) for a in range(d)),
        unit=unit,
        counit=tuple(counit.get(k, field.zero) for k in range(d)),
        name=name,
    )
    return AlgebraFile(pres, positions)


def parse_algebra(text, name="file"):
    return parse_algebra_file(text, name).presentation


def load(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError("cannot read %s: %s" % (path, e.strerror)) from None
    return parse_algebra(text, name="file:" + path.stem)


def _format_lincomb(field, names, vec):
    terms = []
    for k, c in enumerate(vec):
        if not c:
            continue
        if c == field.one:
            terms.append(names[k])
        else:
            terms.append("%s * %s" % (field.format(c), names[k]))
    return " + ".join(terms) if terms else "0"


def format_algebra(pres):
    """The canonical text for a presentation."""
    F = pres.field
    names = pres.basis_names
    if isinstance(F, PrimeField):
        head = "field GF %d" % F.p
    else:
        head = "field %s" % F.name
    out = [head, "basis " + " ".join(names), "unit " + _format_lincomb(F, names, pres.unit)]
    for a, na in enumerate(names):
        for b, nb in enumerate(names):
            out.append("mul %s %s = %s" % (na, nb, _format_lincomb(F, names, pres.mul[a][b])))
    for k, nm in enumerate(names):
        if pres.counit[k]:
            out.append("counit %s = %s" % (nm, F.format(pres.counit[k])))
    return "\n".join(out) + "\n"


def canonicalize(text):
    return format_algebra(parse_algebra(text))


def shipped_files():
    return sorted(DATA_DIR.glob("*.frob"))
