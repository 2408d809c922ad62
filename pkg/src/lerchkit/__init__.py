"""lerchkit: the Lerch transcendent, its relatives, and integral-identity checks.

Scalar hot loops (direct Lerch series, Euler-Maclaurin Hurwitz sum and the
rational form of Phi at non-positive integer s) are compiled from
_kernels/_ckernels.pyx when Cython is available at build time; otherwise the
pure-Python versions in _kernels/_pykernels.py are used. lerchkit._kernels.BACKEND
says which one was loaded.
"""
__version__ = "0.1.0"

from ._kernels import BACKEND
from .errors import ConvergenceError, DomainError, LerchkitError, PoleError, SingularityError
from .quad import Integrand, QuadResult, Singularity, integrate_semi_infinite, limit_extrapolate
from .special import (
    LerchArgs,
    Regime,
    catalan,
    digamma,
    harmonic,
    hurwitz_zeta,
    hurwitz_zeta_deriv,
    lerch_phi,
    log_gamma,
    polygamma,
)

__all__ = [
    "BACKEND",
    "LerchkitError",
    "PoleError",
    "DomainError",
    "ConvergenceError",
    "SingularityError",
    "Integrand",
    "QuadResult",
    "Singularity",
    "integrate_semi_infinite",
    "limit_extrapolate",
    "LerchArgs",
    "Regime",
    "lerch_phi",
    "hurwitz_zeta",
    "hurwitz_zeta_deriv",
    "polygamma",
    "digamma",
    "log_gamma",
    "harmonic",
    "catalan",
]
