"""Exception types shared by all qhecke modules."""


class QheckeError(Exception):
    """Base class for all qhecke errors."""


class ZeroSeries(QheckeError):
    """Operation undefined on the identically-zero series."""


class BadLeadingTerm(QheckeError):
    """Series does not have the leading term the operation requires."""


class NotNormalized(QheckeError):
    """Leading coefficient is not 1."""


class InsufficientPrecision(QheckeError):
    """The operation needs more input coefficients than are available."""


class NonIntegralOrder(QheckeError):
    """The order at infinity is not an integer."""


class NonIntegralExponents(QheckeError):
    """Product exponents are required to be integers but are not."""


class NotPrime(QheckeError):
    """Argument must be prime."""


class NotOddPrime(QheckeError):
    """Argument must be an odd prime."""


class UnsupportedWeight(QheckeError):
    """Eisenstein series of this weight is not provided."""
