"""Exception types shared across the package."""


class MatSpanError(Exception):
    """Base class for every error raised by this library."""


class NotPrime(MatSpanError):
    """Requested characteristic is not a prime number."""


class Overflow(MatSpanError):
    """Requested field order exceeds the supported bound."""


class BaseNotPrime(MatSpanError):
    """An extension was requested over a field that is not a prime field."""


class NotIrreducible(MatSpanError):
    """A polynomial required to be irreducible is not."""


class DivisionByZero(MatSpanError, ZeroDivisionError):
    """Division by the zero element of a field."""


class FieldMismatch(MatSpanError):
    """Operands are owned by different fields."""


class ZeroPolynomial(MatSpanError):
    """The zero polynomial was passed where it is not meaningful."""


class EmbeddingUnavailable(MatSpanError):
    """No embedding exists between the given fields."""


class NotSquare(MatSpanError):
    """A square matrix was required."""


class DimensionMismatch(MatSpanError):
    """Matrix dimensions do not conform."""


class SelfCheckError(MatSpanError):
    """An internal consistency check failed; this indicates a library defect."""


class LemmaViolation(SelfCheckError):
    """The two rank characterizations of the reachability test disagreed."""


class PropositionViolation(SelfCheckError):
    """The 2x2 commutator test disagreed with the eigenvector criterion."""


class DTooSmall(MatSpanError):
    """Krylov depth below the degree of the minimal polynomial."""


class NotEigenvectors(MatSpanError):
    """Supplied vectors failed exact eigenvector verification."""


class NotDiagonalizableCyclic(MatSpanError):
    """A characteristic polynomial required to be square-free is not."""


class Not2x2(MatSpanError):
    """The commutator test is defined for 2x2 matrices only."""


class InvalidOrder(MatSpanError):
    """The given order is not a prime power at least 2."""


class BudgetExceeded(MatSpanError):
    """An enumeration would exceed the configured work budget."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class ParseError(MatSpanError):
    """An instance file is malformed."""


class FieldError(MatSpanError):
    """An instance file describes an invalid field or out-of-range entries."""


class InvalidKind(MatSpanError):
    """Unknown instance generator kind."""
