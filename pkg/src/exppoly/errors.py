"""Error taxonomy shared by all modules.

Every domain error raised by the library derives from ExpPolyError, so the
CLI can map them uniformly to exit code 1.
"""


class ExpPolyError(Exception):
    """Base class for all library errors."""


class DivisionByZero(ExpPolyError):
    pass


class ContextMismatch(ExpPolyError):
    pass


class UnsupportedRootOfUnity(ExpPolyError):
    """A formal exponential would need a root of unity of order not dividing 4."""


class DenominatorBoundExceeded(ExpPolyError):
    """A fractional exponent exceeded the context's denominator bound."""


class NonLinearExponent(ExpPolyError):
    """Exponent is not a Q(i)-linear combination of 1 and the generators."""


class ZeroPolynomial(ExpPolyError):
    pass


class NotSimple(ExpPolyError):
    pass


class SimpleInput(ExpPolyError):
    pass


class ZeroDivisor(ExpPolyError):
    pass


class BasisDoesNotSpan(ExpPolyError):
    pass


class CoefficientsOutsideBaseField(ExpPolyError):
    """Operation needs Q(i) coefficients but a transcendental generator appears."""


class ReducibleInput(ExpPolyError):
    pass


class DoesNotVanish(ExpPolyError):
    pass


class NotLinearFactor(ExpPolyError):
    pass


class ZeroSolution(ExpPolyError):
    pass


class LengthMismatch(ExpPolyError):
    pass


class TooLong(ExpPolyError):
    pass


class BadSubset(ExpPolyError):
    pass


class EmptySet(ExpPolyError):
    pass


class ZeroCoordinate(ExpPolyError):
    pass


class UndeclaredSymbol(ExpPolyError):
    pass


class ParseError(ExpPolyError):
    """Syntax error with a 0-based position into the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
