"""Exception hierarchy.

Two families matter to the command line: ``InputError`` (bad files,
bad arguments, malformed presentations; exit code 2) and ``MathError``
(a mathematical verification failed; exit code 1).
"""

from __future__ import annotations


class FrobError(Exception):
    """Base class for every error raised by this package."""


class InputError(FrobError):
    pass


class MathError(FrobError):
    pass


# -- scalars ---------------------------------------------------------------

class FieldMismatch(InputError):
    pass


class DivisionByZero(MathError, ZeroDivisionError):
    pass


class NoSquareRoot(MathError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None, expected=None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        where = []
        if line is not None:
            where.append("line %d" % line)
        if column is not None:
            where.append("column %d" % column)
        text = message
        if where:
            text = "%s: %s" % (", ".join(where), message)
        if expected:
            text += " (expected %s)" % expected
        super().__init__(text)


# -- linear algebra --------------------------------------------------------

class ArityMismatch(InputError):
    pass


# -- algebras --------------------------------------------------------------

class NotAssociative(MathError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or "multiplication is not associative at %r" % (witness,))


class UnitLawFails(MathError):
    pass


class DegeneratePairing(MathError):
    pass


class FrobeniusAxiomFails(MathError):
    """A derived Frobenius identity failed; carries the identity name."""

    def __init__(self, identity):
        self.identity = identity
        super().__init__("Frobenius identity fails: %s" % identity)


class NotAGroup(InputError):
    pass


class ZeroParameter(InputError):
    pass


class DuplicateMulLine(ParseError):
    pass


class UnknownBasisName(ParseError):
    pass


# -- cohomology ------------------------------------------------------------

class DegreeMismatch(InputError):
    pass


# -- R-matrices and deformations ------------------------------------------

class NotSymmetric(MathError):
    pass


class NotCommutative(MathError):
    pass


class NoScalarHandle(MathError):
    pass


class NoSolutionInField(MathError):
    pass


class SingularCoefficient(MathError):
    pass


class NotProportionalToIdentity(MathError):
    pass


class YBEFails(MathError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
