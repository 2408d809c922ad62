"""Complex special functions: Lerch Phi, Hurwitz zeta, gamma family, Catalan."""
from ._elementary import cos_pi, neg_one_pow, sin_pi
from .catalan import catalan
from .gamma import EULER_GAMMA, digamma, gamma, harmonic, log_gamma, polygamma
from .lerch import LerchArgs, Regime, lerch_phi
from .zeta import hurwitz_zeta, hurwitz_zeta_deriv

__all__ = [
    "LerchArgs",
    "Regime",
    "lerch_phi",
    "hurwitz_zeta",
    "hurwitz_zeta_deriv",
    "polygamma",
    "digamma",
    "log_gamma",
    "gamma",
    "harmonic",
    "catalan",
    "EULER_GAMMA",
    "sin_pi",
    "cos_pi",
    "neg_one_pow",
]
