"""Exact scalars over Q, Q(i) and GF(p).

Rationals are plain ``fractions.Fraction`` values.  Gaussian rationals and
prime-field residues get small immutable classes below.  A field object
(``QQ``, ``QQi``, ``GF(p)``) coerces, parses, prints and takes square roots;
element arithmetic goes through the usual Python operators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, FieldMismatch, InputError, NoSquareRoot, ParseError


def _rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise FieldMismatch("not a rational: %r" % (x,))


class GaussianRational:
    """re + im*i with re, im in Q."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _rational(re))
        object.__setattr__(self, "im", _rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        if isinstance(other, Residue):
            raise FieldMismatch("cannot mix Q(i) with GF(%d)" % other.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise DivisionByZero("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = GaussianRational(1)
        for _ in range(abs(n)):
            result = result * base
        return result

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Residue) else None
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return "GaussianRational(%s)" % QQi.format(self)


class Residue:
    """An element of GF(p), stored as a residue in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v % p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch("GF(%d) vs GF(%d)" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, GaussianRational)):
            raise FieldMismatch("cannot mix GF(%d) with %r" % (self.p, other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.v, self.p)

    def inverse(self):
        if not self.v:
            raise DivisionByZero("inverse of zero in GF(%d)" % self.p)
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return Residue(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return "Residue(%d mod %d)" % (self.v, self.p)


# -- scalar text ------------------------------------------------------------

_RAT = r"-?\d+(?:/\d+)?"
_UNSIGNED = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    r"\((?P<pre>%s)(?P<sign>[+-])(?P<pim>%s)i\)"
    r"|(?P<im>%s)i"
    r"|(?P<bare>-?)i(?![\w^])"
    r"|(?P<re>%s)" % (_RAT, _UNSIGNED, _RAT, _RAT)
)


def _parse_fraction(text, pos):
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", column=pos + 1)
    return Fraction(int(num), int(den) if den else 1)


def scan_scalar(text, pos=0):
    """Match one scalar token at ``pos``.

    Returns ``(re, im, end)`` with Fraction parts; the caller maps the pair
    into its field.  Raises ParseError when nothing scalar-shaped is there.
    """
    m = _SCALAR_RE.match(text, pos)
    if not m:
        raise ParseError("bad scalar %r" % text[pos:pos + 12], column=pos + 1,
                         expected="rational, rational 'i' or (rational+-rational 'i')")
    if m.group("pre") is not None:
        re_ = _parse_fraction(m.group("pre"), m.start("pre"))
        im = _parse_fraction(m.group("pim"), m.start("pim"))
        if m.group("sign") == "-":
            im = -im
        return re_, im, m.end()
    if m.group("im") is not None:
        return Fraction(0), _parse_fraction(m.group("im"), m.start("im")), m.end()
    if m.group("bare") is not None:
        return Fraction(0), Fraction(-1 if m.group("bare") else 1), m.end()
    return _parse_fraction(m.group("re"), m.start("re")), Fraction(0), m.end()


# -- fields -----------------------------------------------------------------

class Field:
    """Shared behaviour; subclasses are frozen dataclasses."""

    name = "?"
    characteristic = 0

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text):
        text = text.strip()
        re_, im, end = scan_scalar(text, 0)
        if end != len(text):
            raise ParseError("trailing characters %r" % text[end:], column=end + 1)
        return self._from_parts(re_, im, 0)

    def _from_parts(self, re_, im, column):
        raise NotImplementedError

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Rationals(Field):
    name = "Q"

    def __call__(self, x):
        if isinstance(x, GaussianRational):
            if x.im:
                raise FieldMismatch("%r is not rational" % x)
            return x.re
        if isinstance(x, Residue):
            raise FieldMismatch("cannot coerce %r into Q" % x)
        return Fraction(x)

    def contains(self, x):
        return isinstance(x, Fraction)

    def _from_parts(self, re_, im, column):
        if im:
            raise ParseError("imaginary part not allowed over Q", column=column + 1)
        return re_

    def format(self, x):
        return str(Fraction(x))

    def sqrt(self, a):
        a = self(a)
        if a < 0:
            raise NoSquareRoot("%s has no square root in Q" % a)
        n, d = isqrt(a.numerator), isqrt(a.denominator)
        if n * n != a.numerator or d * d != a.denominator:
            raise NoSquareRoot("%s has no square root in Q" % a)
        return Fraction(n, d)

    def random(self, rng, size=3):
        return Fraction(rng.randint(-size, size), rng.randint(1, size))


@dataclass(frozen=True)
class GaussianRationals(Field):
    name = "Qi"

    def __call__(self, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, Residue):
            raise FieldMismatch("cannot coerce %r into Q(i)" % x)
        if isinstance(x, complex):
            raise FieldMismatch("floating point values are not exact")
        return GaussianRational(Fraction(x), 0)

    def contains(self, x):
        return isinstance(x, GaussianRational)

    def _from_parts(self, re_, im, column):
        return GaussianRational(re_, im)

    def format(self, x):
        x = self(x)
        if not x.im:
            return str(x.re)
        if not x.re:
            return "%si" % x.im
        sign = "-" if x.im < 0 else "+"
        return "(%s%s%si)" % (x.re, sign, abs(x.im))

    def sqrt(self, a):
        a = self(a)
        u, v = a.re, a.im
        try:
            n = QQ.sqrt(u * u + v * v)
            if v == 0 and u < 0:
                root = GaussianRational(0, QQ.sqrt(-u))
            else:
                x = QQ.sqrt((u + n) / 2)
                root = GaussianRational(x, v / (2 * x)) if x else GaussianRational(0, QQ.sqrt((n - u) / 2))
        except NoSquareRoot:
            raise NoSquareRoot("%s has no square root in Q(i)" % self.format(a)) from None
        if root * root != a:
            raise NoSquareRoot("%s has no square root in Q(i)" % self.format(a))
        if root.re < 0 or (root.re == 0 and root.im < 0):
            root = -root
        return root

    def random(self, rng, size=3):
        return GaussianRational(QQ.random(rng, size), QQ.random(rng, size))


def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not (2 <= self.p < 2 ** 31) or not _is_prime(self.p):
            raise InputError("GF(p) needs a prime p < 2^31, got %r" % (self.p,))

    @property
    def name(self):
        return "GF%d" % self.p

    @property
    def characteristic(self):
        return self.p

    def __call__(self, x):
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch("GF(%d) vs GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero("denominator %d vanishes mod %d" % (x.denominator, self.p))
            return Residue(x.numerator, self.p) / x.denominator
        if isinstance(x, GaussianRational):
            if x.im:
                raise FieldMismatch("%r is not in GF(%d)" % (x, self.p))
            return self(x.re)
        if isinstance(x, int):
            return Residue(x, self.p)
        raise FieldMismatch("cannot coerce %r into GF(%d)" % (x, self.p))

    def contains(self, x):
        return isinstance(x, Residue) and x.p == self.p

    def _from_parts(self, re_, im, column):
        if im:
            raise ParseError("imaginary part not allowed over GF(%d)" % self.p, column=column + 1)
        try:
            return self(re_)
        except DivisionByZero as exc:
            raise ParseError(str(exc), column=column + 1) from None

    def format(self, x):
        return str(self(x).v)

    def sqrt(self, a):
        a = self(a)
        p = self.p
        if p == 2 or not a.v:
            return a
        if pow(a.v, (p - 1) // 2, p) != 1:
            raise NoSquareRoot("%d is not a square mod %d" % (a.v, p))
        r = _tonelli_shanks(a.v, p)
        return Residue(min(r, p - r), p)

    def random(self, rng, size=None):
        return Residue(rng.randrange(self.p), self.p)


def _tonelli_shanks(n, p):
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


QQ = Rationals()
QQi = GaussianRationals()


def GF(p):
    return PrimeField(p)


def field_from_name(text):
    """'Q', 'Qi', 'GF2', 'GF 2' or 'GF:2'."""
    t = text.strip()
    if t == "Q":
        return QQ
    if t == "Qi":
        return QQi
    m = re.fullmatch(r"GF[\s:]*(\d+)", t)
    if m:
        return PrimeField(int(m.group(1)))
    raise ParseError("unknown field %r" % text, expected="Q, Qi or GF <p>")


def field_of(x):
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, GaussianRational):
        return QQi
    if isinstance(x, Residue):
        return PrimeField(x.p)
    if isinstance(x, int):
        return None
    raise FieldMismatch("not a scalar: %r" % (x,))


def parse_scalar(text, field):
    return field.parse(text)


def print_scalar(x, field):
    return field.format(x)


def sqrt_in_field(a, field=None):
    field = field or field_of(a) or QQ
    return field.sqrt(a)


def scalar_arith(op, a, b=None):
    """Dispatch one of add/sub/mul/neg/inv/eq, checking that fields agree."""
    fa = field_of(a)
    if b is not None:
        fb = field_of(b)
        if fa is not None and fb is not None and fa != fb:
            raise FieldMismatch("%s vs %s" % (fa, fb))
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        if not a:
            raise DivisionByZero("inverse of zero")
        return a.inverse() if hasattr(a, "inverse") else 1 / Fraction(a)
    if op == "eq":
        return a == b
    raise ValueError("unknown op %r" % op)
