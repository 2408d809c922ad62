"""Exception hierarchy shared by every lerchkit module."""


class LerchkitError(ArithmeticError):
    """Base class for all numerical failures raised by lerchkit."""


class PoleError(LerchkitError):
    """An operation was evaluated exactly at a pole of the function."""


class DomainError(LerchkitError, ValueError):
    """The arguments fall outside every supported evaluation regime."""


class ConvergenceError(LerchkitError):
    """A series, quadrature or extrapolation failed to reach its tolerance."""


class SingularityError(LerchkitError):
    """An integrand produced a non-finite value at an interior node."""
