"""Exception types raised across the package.

Every error derives from :class:`JensenGapError` so callers can catch the
package's failures with a single handler.
"""


class JensenGapError(Exception):
    """Base class for all errors raised by this package."""


class NonHermitianInput(JensenGapError):
    """A matrix fails the self-adjointness check."""


class DimensionMismatch(JensenGapError):
    """Operands have incompatible dimensions."""


class SpectrumOutOfWindow(JensenGapError):
    """An eigenvalue lies outside the declared spectral window."""


class NonFiniteFunctionValue(JensenGapError):
    """A scalar map produced NaN or infinity on the spectrum."""


class NotPositive(JensenGapError):
    """An operation required a (strictly) positive element."""


class ContourDoesNotEncloseSpectrum(JensenGapError):
    """A quadrature contour does not strictly enclose every eigenvalue."""


class SingularResolvent(JensenGapError):
    """A quadrature node collides with an eigenvalue."""


class ConvergenceError(JensenGapError):
    """An iterative routine failed to reach its stopping criterion."""


class UnsupportedFamily(JensenGapError):
    """Unknown state-functional family tag."""


class UnknownFunction(JensenGapError):
    """A function selector string does not resolve in the catalog."""


class EndpointDegenerate(JensenGapError):
    """Slope-defect evaluation requested too close to a window endpoint."""


class EmptyInput(JensenGapError):
    """An aggregate operation received no data."""


class TOutOfWindow(JensenGapError):
    """An expansion point lies outside the spectral window."""


class PreconditionViolated(JensenGapError):
    """A chain evaluator's hypothesis fails for the given instance."""


class WindowOutsideDomain(JensenGapError):
    """A spectral window is not contained in a function's domain."""


class NonIntegrable(JensenGapError):
    """A function could not be integrated over the window."""


class ConfigError(JensenGapError):
    """Invalid campaign configuration."""


class ParseError(JensenGapError):
    """Malformed serialized input (reports line/column when available)."""


class InvariantViolation(JensenGapError):
    """Deserialized data violates a structural invariant."""
