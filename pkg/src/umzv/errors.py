"""Exception types shared across the package."""


class UmzvError(Exception):
    """Base class for all library errors."""


class DenominatorNotCoprime(UmzvError):
    """A reduction mod v was requested for a value with v in its denominator."""


class ZeroInput(UmzvError):
    """An operation that requires a nonzero input received zero."""


class NotMonic(UmzvError):
    """A monic polynomial was required."""


class ZeroToPrecision(UmzvError):
    """All known coefficients of a Laurent element vanish, so its valuation
    is not determined at the current precision."""


class PrecisionTooLow(UmzvError):
    """A defining check could not be certified at the requested precision."""


class PrecisionNotCertified(UmzvError):
    """A truncation tail could not be bounded below the target precision."""


class NotInvertible(UmzvError):
    """Inversion failed: the element is a zero divisor in the quotient ring."""


class WrongModulus(UmzvError):
    """The cyclotomic ring modulus does not have the required shape."""


class BracketNotInvertible(UmzvError):
    """A harmonic sum needed the inverse of a non-invertible bracket image."""


class IndexMismatch(UmzvError):
    """Delta coefficient indices do not satisfy i + j = r1 + s1."""


class NonIntegralCoefficient(UmzvError):
    """A t-expansion coefficient fell outside A; this would falsify the
    integrality statement and signals a bug."""


class UnknownSuite(UmzvError):
    """The requested verification suite name is not registered."""
