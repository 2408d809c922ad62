"""Digamma, polygamma, log-gamma and harmonic numbers for complex arguments."""
import cmath
import math

from ..errors import PoleError
from ._bernoulli import DIGAMMA_ASYMP, STIRLING
from ._elementary import is_nonpositive_int, nearest_int, sin_pi, cos_pi
from .zeta import hurwitz_zeta

__all__ = ["digamma", "polygamma", "log_gamma", "gamma", "harmonic", "EULER_GAMMA"]

EULER_GAMMA = 0.57721566490153286061
_HALF_LOG_2PI = 0.91893853320467274178


def _pole_check(x):
    if is_nonpositive_int(x, 0.0):
        raise PoleError(f"pole at non-positive integer {x}")


def digamma(x):
    x = complex(x)
    _pole_check(x)
    if x.real < 0.5:
        # psi(x) = psi(1-x) - pi cot(pi x)
        return digamma(1 - x) - math.pi * cos_pi(x) / sin_pi(x)
    acc = 0j
    while x.real < 10:
        acc -= 1 / x
        x += 1
    x2 = 1 / (x * x)
    series = 0j
    p = x2
    for c in DIGAMMA_ASYMP:
        series += c * p
        p *= x2
    return acc + cmath.log(x) - 0.5 / x - series


def polygamma(n, x):
    """n-th derivative of digamma. n >= 1 uses the Hurwitz zeta bridge."""
    if int(n) != n or n < 0:
        raise ValueError("n must be a non-negative integer")
    n = int(n)
    x = complex(x)
    _pole_check(x)
    if n == 0:
        return digamma(x)
    return (-1) ** (n + 1) * math.factorial(n) * hurwitz_zeta(n + 1, x)


def log_gamma(x):
    """Principal log-gamma, continued so that it is analytic off (-inf, 0].

    For complex or negative arguments the upward-recurrence logs are summed
    individually, which keeps the imaginary part continuous.
    """
    x = complex(x)
    _pole_check(x)
    n = nearest_int(x, 0.0)
    if n is not None and 0 < n <= 25:
        return complex(math.lgamma(n))
    shift = 0j
    if x.imag == 0.0 and x.real > 0:
        prod = 1.0
        r = x.real
        while r < 15:
            prod *= r
            r += 1
        shift = complex(math.log(prod)) if prod != 1.0 else 0j
        x = complex(r)
    else:
        while x.real < 15:
            shift += cmath.log(x)
            x += 1
    x2 = 1 / (x * x)
    series = 0j
    p = 1 / x
    for c in STIRLING:
        series += c * p
        p *= x2
    return (x - 0.5) * cmath.log(x) - x + _HALF_LOG_2PI + series - shift


def gamma(x):
    n = nearest_int(x, 0.0)
    if n is not None and 0 < n < 25:
        return complex(math.factorial(n - 1))
    return cmath.exp(log_gamma(x))


def harmonic(x):
    """H_x = psi(x+1) + gamma, the harmonic numbers extended to complex x."""
    x = complex(x)
    if is_nonpositive_int(x + 1, 0.0):
        raise PoleError(f"H_x has a pole at negative integer {x}")
    n = nearest_int(x, 0.0)
    if n is not None and 0 <= n <= 64:
        return complex(math.fsum(1.0 / j for j in range(1, n + 1)))
    return digamma(x + 1) + EULER_GAMMA
