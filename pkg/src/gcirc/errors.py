"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: bad input or configuration exits 2,
resource guards exit 3.
"""


class GcircError(Exception):
    """Base class for all toolkit errors."""


class BadDegreeError(GcircError, ValueError):
    """Modulus bitmask does not encode a degree-m polynomial, or m out of range."""


class ReducibleModulusError(GcircError, ValueError):
    """Trial division found a nontrivial factor of the modulus."""


class ParseError(GcircError, ValueError):
    """Element literal not recognized as hex or polynomial syntax."""


class OutOfRangeError(ParseError):
    """Element literal names a term of degree >= m or a value >= 2^m."""


class DimensionError(GcircError, ValueError):
    """Incompatible shapes, out-of-range indices, or dimension cap exceeded."""


class SingularMatrixError(GcircError, ArithmeticError):
    """Inverse requested for a matrix with determinant zero."""


class NotCoprimeError(GcircError, ValueError):
    """Operation requires gcd(g, k) = 1."""


class NotKCycleError(GcircError, ValueError):
    """Permutation is not a single k-cycle."""


class SpaceTooLargeError(GcircError, RuntimeError):
    """Resource guard: the requested enumeration is past desk scale."""


class ResumeTokenError(GcircError, ValueError):
    """Resume token outside the job's candidate range."""


class ConfigError(GcircError, ValueError):
    """Malformed job description or CLI configuration."""
