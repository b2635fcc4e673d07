"""Exception hierarchy shared by all chainent modules."""


class ChainentError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ChainentError, ValueError):
    """A parameter lies outside its admissible domain (CLI exit code 2)."""


class ConvergenceError(ChainentError, ArithmeticError):
    """A series did not converge within the configured term cap (CLI exit code 3)."""


class LagBoundError(ChainentError, ValueError):
    """A correlation table is too short for the requested block geometry.

    The caller must rebuild the table with a larger maximum lag.
    """


class InvalidCovarianceError(ChainentError, ArithmeticError):
    """A covariance violates positivity (delta1 or delta2 <= 0); signals an
    upstream numerical failure rather than a physical result."""


class QuadratureError(ChainentError, ArithmeticError):
    """The adaptive quadrature or its tail estimate could not reach the
    requested tolerance (CLI exit code 3)."""
