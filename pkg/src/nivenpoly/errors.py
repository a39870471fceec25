"""Exception hierarchy shared by every module of the package."""


class NivenPolyError(Exception):
    """Base class for all errors raised by nivenpoly."""


class ArityError(NivenPolyError, ValueError):
    """Operands do not live in the same number of indeterminates."""


class ZeroLeadError(NivenPolyError, ValueError):
    """The zero polynomial has no leading monomial."""


class ZeroPolyError(NivenPolyError, ValueError):
    """Operation undefined on the zero univariate polynomial."""


class NotSymmetricError(NivenPolyError, ValueError):
    """Decomposition requested for a polynomial that is not symmetric."""


class InternalProgressError(NivenPolyError, RuntimeError):
    """The decomposition loop failed to make progress (an implementation bug)."""


class CertificateError(NivenPolyError, RuntimeError):
    """A stored certificate failed to re-verify."""


class IntegralityError(NivenPolyError, ValueError):
    """Integer coefficients were required but not present, or a division was inexact."""


class InvalidInputError(NivenPolyError, ValueError):
    """Arguments violate the documented preconditions."""


class QuadratureError(NivenPolyError, RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance."""


class ParseError(NivenPolyError, ValueError):
    """Syntax error in a polynomial expression."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
