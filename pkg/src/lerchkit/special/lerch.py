"""The Lerch transcendent Phi(z, s, v) = sum_{n>=0} z^n (v+n)^-s.

Evaluation regimes:

* SERIES_CONVERGENT   direct summation, |z| < 1
* INTEGRAL_CONTINUABLE  1/Gamma(s) int t^(s-1) e^(-vt)/(1 - z e^-t) dt, Re s > 0
* NEGATIVE_INTEGER_S  closed rational form in z for s = 0, -1, -2, ...
* UNIT_Z              z == 1, i.e. Hurwitz zeta
* LOG_SERIES          expansion in powers of log z, z near 1
* CONTINUED           the integral after n integrations by parts, which
                      extends it to Re s <= 0 and to all z off [1, inf)
"""
import cmath
import enum
import math
from dataclasses import dataclass
from math import comb

import numpy as np

from .. import _kernels
from ..errors import ConvergenceError, DomainError, PoleError
from ..quad import Integrand, integrate_semi_infinite
from ._elementary import is_nonpositive_int, nearest_int
from .gamma import digamma, gamma
from .zeta import hurwitz_zeta

__all__ = ["Regime", "LerchArgs", "lerch_phi", "lerch_negint_array"]

SERIES_TOL = 2.0 ** -55
SERIES_MAX_TERMS = 10 ** 6
SERIES_RADIUS = 0.8
LOG_RADIUS = 1.0
INTEGRAL_TOL = 1e-14


class Regime(enum.Enum):
    SERIES_CONVERGENT = "SeriesConvergent"
    INTEGRAL_CONTINUABLE = "IntegralContinuable"
    NEGATIVE_INTEGER_S = "NegativeIntegerS"
    UNIT_Z = "UnitZ"
    LOG_SERIES = "LogSeries"
    CONTINUED = "Continued"


def _on_cut(z):
    return z.imag == 0.0 and z.real > 1.0


@dataclass(frozen=True)
class LerchArgs:
    z: complex
    s: complex
    v: complex
    regime: Regime = None

    def __post_init__(self):
        for name in ("z", "s", "v"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.regime is None:
            object.__setattr__(self, "regime", self.classify(self.z, self.s, self.v))

    @staticmethod
    def classify(z, s, v):
        """Default regime for (z, s, v); raises DomainError if none applies."""
        z, s, v = complex(z), complex(s), complex(v)
        if z == 1:
            return Regime.UNIT_Z
        if is_nonpositive_int(s):
            return Regime.NEGATIVE_INTEGER_S
        if abs(z) <= SERIES_RADIUS:
            return Regime.SERIES_CONVERGENT
        if _on_cut(z):
            raise DomainError(f"z = {z} lies on the branch cut (1, inf)")
        if abs(cmath.log(z)) <= LOG_RADIUS:
            return Regime.LOG_SERIES
        if abs(z) <= 1 and s.real >= 1:
            return Regime.INTEGRAL_CONTINUABLE
        return Regime.CONTINUED


def lerch_phi(z, s=None, v=None, regime=None, form=2):
    """Phi(z, s, v) on the principal branch.

    Accepts either (z, s, v) or a single LerchArgs. `regime` forces an
    evaluation route; `form` selects the integrand denominator used by the
    integral routes (1: 1 - z e^-t, 2: e^t - z rearranged as
    -expm1(-t) + (1 - z) e^-t).
    """
    if isinstance(z, LerchArgs):
        args = z
        z, s, v = args.z, args.s, args.v
        regime = regime or args.regime
    z, s, v = complex(z), complex(s), complex(v)
    if regime is None:
        regime = LerchArgs.classify(z, s, v)
    if form not in (1, 2):
        raise ValueError("form must be 1 or 2")

    if regime is Regime.UNIT_Z:
        if z != 1:
            raise DomainError("UnitZ regime needs z == 1")
        return hurwitz_zeta(s, v)
    if regime is Regime.NEGATIVE_INTEGER_S:
        n = nearest_int(s)
        if n is None or n > 0:
            raise DomainError("NegativeIntegerS regime needs s in {0, -1, ...}")
        if z == 1:
            raise PoleError("Phi(1, -n, v) as a series diverges; use hurwitz_zeta")
        return _kernels.lerch_negint(z, -n, v)

    if is_nonpositive_int(v, 0.0):
        raise PoleError(f"v = {v} is a non-positive integer")

    if regime is Regime.SERIES_CONVERGENT:
        if not abs(z) < 1:
            raise DomainError("series regime needs |z| < 1")
        return _series(z, s, v)
    if regime is Regime.LOG_SERIES:
        if z == 0 or z == 1 or _on_cut(z) or not abs(cmath.log(z)) < 2 * math.pi:
            raise DomainError("log-series regime needs 0 < |log z| < 2 pi")
        return _log_series(z, s, v)
    if regime is Regime.INTEGRAL_CONTINUABLE:
        if _on_cut(z):
            raise DomainError("integral regime needs z off (1, inf)")
        if s.real <= (1 if z == 1 else 0):
            raise DomainError("integral regime needs Re(s) > 0 (Re(s) > 1 at z = 1)")
        return _shifted(z, s, v, lambda vv: _integral(z, s, vv, 0, form))
    if regime is Regime.CONTINUED:
        if _on_cut(z) or z == 1:
            raise DomainError(f"z = {z} lies on the branch cut [1, inf)")
        n = max(1, math.ceil(1 - s.real))
        return _shifted(z, s, v, lambda vv: _integral(z, s, vv, n, form))
    raise ValueError(f"unknown regime {regime!r}")


def _series(z, s, v):
    val, n = _kernels.lerch_series(z, s, v, SERIES_TOL, SERIES_MAX_TERMS)
    if n >= SERIES_MAX_TERMS:
        raise ConvergenceError(f"Lerch series did not converge in {n} terms")
    return val


def _shifted(z, s, v, core):
    # Phi(z,s,v) = sum_{j<M} z^j (v+j)^-s + z^M Phi(z,s,v+M), so Re(v) >= 1
    head = 0j
    zj = 1 + 0j
    while v.real < 1:
        head += zj * cmath.exp(-s * cmath.log(v))
        zj *= z
        v += 1
    return head + zj * core(v)


def lerch_negint_array(w, n, v):
    """Vectorised Phi(w, -n, v) for an array of w."""
    w = np.asarray(w, dtype=complex)
    inv = 1.0 / (1.0 - w)
    total = v ** n * inv
    for i in range(1, n + 1):
        poly = np.zeros_like(w)
        for c in reversed(_kernels.eulerian_row(i)):
            poly = poly * w + c
        total = total + comb(n, i) * v ** (n - i) * w * poly * inv ** (i + 1)
    return total


def _integral(z, s, v, n, form):
    """1/Gamma(s+n) int t^(s+n-1) e^(-vt) Phi(z e^-t, -n, v) dt, Re(v) >= 1."""
    sn = s + n
    omz = 1 - z

    if n == 0:
        if form == 2:
            def kern(t):
                return 1.0 / (-np.expm1(-t) + omz * np.exp(-t))
        else:
            def kern(t):
                return 1.0 / (1.0 - z * np.exp(-t))
    else:
        def kern(t):
            return lerch_negint_array(z * np.exp(-t), n, v)

    snm1 = sn - 1
    if snm1 == 0:
        def f(t):
            return np.exp(-v * t) * kern(t)
    else:
        def f(t):
            return np.exp(snm1 * np.log(t) - v * t) * kern(t)

    r = integrate_semi_infinite(Integrand(f, v.real), tol=INTEGRAL_TOL, abs_tol=1e-300)
    return r.value / gamma(sn)


def _log_series(z, s, v):
    """z^-v [Gamma(1-s)(-L)^(s-1) + sum_k zeta(s-k, v) L^k / k!], L = log z.

    Valid for |L| < 2 pi; for integer s = p >= 1 the singular k = p-1 term
    and the Gamma term merge into L^(p-1)/(p-1)! (psi(p) - psi(v) - log(-L)).
    """
    L = cmath.log(z)
    p = nearest_int(s, 0.0)
    integer = p is not None and p >= 1
    total = 0j
    if not integer:
        total += gamma(1 - s) * cmath.exp((s - 1) * cmath.log(-L))
    Lk = 1 + 0j
    small = 0
    for k in range(200):
        if integer and k == p - 1:
            term = Lk * (digamma(p) - digamma(v) - cmath.log(-L))
        else:
            term = hurwitz_zeta(s - k, v) * Lk
        total += term
        if abs(term) <= 1e-17 * abs(total):
            small += 1
            if small >= 2 and (not integer or k >= p):
                break
        else:
            small = 0
        Lk *= L / (k + 1)
    else:
        raise ConvergenceError("log-series for Phi did not converge")
    return cmath.exp(-v * L) * total
