"""Exception and warning types shared across the package."""


class DTTKitError(Exception):
    """Base class for all package errors."""


class DivergenceError(DTTKitError):
    """No convergence certificate covers the requested infinite sum."""


class DomainError(DTTKitError):
    """Arguments fall outside the operation's convergence/validity region."""


class NonRealMass(DTTKitError):
    """A signed-measure split was requested but a point mass is not real."""


class ZeroCoefficient(DTTKitError):
    """A coefficient that must be nonzero (it appears in a denominator) is zero."""


class NonIntegerResult(DTTKitError):
    """A sum that must round to an integer has too large a residual."""


class LengthMismatch(DTTKitError):
    """Paired sequences/vectors do not have compatible lengths."""


class SingularMatrix(DTTKitError):
    """Matrix is exactly singular (duplicate Vandermonde nodes)."""


class ZeroPivot(DTTKitError):
    """A leading inverse entry needed as a divisor is zero."""


class NoVandermondeStructure(DTTKitError):
    """The weighted inverse Vandermonde matrix is not itself Vandermonde,
    so this driver admits no orthogonality-based inverse transform."""


class QuadratureTooCoarse(DTTKitError):
    """Contour quadrature node count is too small for the integrand degree."""


class RankDeficient(DTTKitError):
    """Rectangular matrix lacks the full row/column rank the side requires."""


class DuplicateValue(DTTKitError):
    """Two symbols map to the same numeric value."""


class MalformedLine(DTTKitError):
    """A symbol-table line is not `char<TAB>value`."""


class UnknownSymbol(DTTKitError):
    """Message contains a character absent from the symbol table."""


class BadIndex(DTTKitError):
    """Driver-book index is outside 1..M."""


class AmbiguousSymbol(DTTKitError):
    """A recovered value is farther than the separation guard from every
    table value."""


class TruncatedStream(DTTKitError):
    """Wire stream ended mid-record."""


class SizeMismatch(DTTKitError):
    """Payload/extent does not match the declared or implied structure."""


class MalformedHeader(DTTKitError):
    """Image header is not a supported PGM variant."""


class TruncatedPixels(DTTKitError):
    """Image raster holds fewer samples than the header promises."""


class NotPrime(DTTKitError):
    """Modulus fails the primality check."""


class NoInverse(DTTKitError):
    """Requested modular inverse does not exist."""


class IllConditionedWarning(UserWarning):
    """Condition estimate of a Vandermonde system exceeds the trust threshold."""
