"""Exception hierarchy.

Every validation failure raised by the library derives from :class:`InputError`
so callers (notably the CLI) can map them to a single exit code.
"""


class PBentError(Exception):
    pass


class InputError(PBentError, ValueError):
    pass


class ParseError(InputError):
    pass


class NotPrime(InputError):
    pass


class NotMonic(InputError):
    pass


class Reducible(InputError):
    def __init__(self, factor_degree, message=None):
        self.factor_degree = factor_degree
        super().__init__(message or f"modulus is reducible (has a factor of degree {factor_degree})")


class NotADivisor(InputError):
    pass


class NotPrimitive(InputError):
    pass


class FieldMismatch(InputError):
    pass


class MixedRootOrder(InputError):
    pass


class DivisionByZero(PBentError, ZeroDivisionError):
    pass


class OutOfRange(InputError):
    pass


class OddDegree(InputError):
    pass


class DegreeTooSmall(InputError):
    pass


class NotInSubfield(InputError):
    pass


class ZeroParameter(InputError):
    pass


class ZeroLambda(ZeroParameter):
    pass


class UInPrimeField(InputError):
    pass


class NotTernary(InputError):
    pass


class NotAPermutation(InputError):
    pass


class NotBent(InputError):
    pass


class InvariantViolation(PBentError, AssertionError):
    """An internal identity (Parseval, inversion, fast = naive ...) failed."""
