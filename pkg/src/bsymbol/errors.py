"""Exception types raised across the package.

Every error derives from :class:`BSymbolError`, and most also derive from the
closest builtin (``ValueError``, ``ZeroDivisionError``, ...) so callers can
catch either.
"""


class BSymbolError(Exception):
    """Base class for all package errors."""


# finite fields
class NonPrimeCharacteristic(BSymbolError, ValueError):
    pass


class ReducibleModulus(BSymbolError, ValueError):
    """The modulus is malformed or factors over the prime field."""


class NoBuiltinModulus(BSymbolError, ValueError):
    pass


class OrderTooLarge(BSymbolError, ValueError):
    pass


class DivisionByZero(BSymbolError, ZeroDivisionError):
    pass


class FieldMismatch(BSymbolError, TypeError):
    pass


# linear codes
class LengthExceedsField(BSymbolError, ValueError):
    pass


class DuplicateEvalPoints(BSymbolError, ValueError):
    pass


class InvalidDimension(BSymbolError, ValueError):
    pass


class DimensionMismatch(BSymbolError, ValueError):
    pass


class EnumerationTooLarge(BSymbolError, RuntimeError):
    """Exhaustive enumeration would exceed the configured bound."""


class ShortenTooLarge(BSymbolError, ValueError):
    pass


class NotMDS(BSymbolError, ValueError):
    pass


class RankDeficient(BSymbolError, ValueError):
    pass


# b-symbol metric
class EmptyVector(BSymbolError, ValueError):
    pass


class LengthMismatch(BSymbolError, ValueError):
    pass


class ZeroVector(BSymbolError, ValueError):
    pass


class InvalidShape(BSymbolError, ValueError):
    pass


# counting / distributions
class InvalidB(BSymbolError, ValueError):
    pass


class InvalidProfile(BSymbolError, ValueError):
    pass


class NotMDSQuery(BSymbolError, ValueError):
    pass


# oracle
class FieldTooSmall(BSymbolError, ValueError):
    pass


class BoundExceeded(BSymbolError, ValueError):
    pass
