"""Hurwitz zeta function and its derivative in s."""
import cmath
import math

import numpy as np

from .. import _kernels
from ..errors import DomainError, PoleError
from ..quad import Integrand, integrate_semi_infinite
from ._bernoulli import EM_WEIGHTS, bernoulli_poly
from ._clog1p import clog1p
from ._elementary import is_nonpositive_int, nearest_int

__all__ = ["hurwitz_zeta", "hurwitz_zeta_deriv"]

EM_TERMS = 8
_HERMITE_TOL = 1e-15
_TWO_PI = 2 * math.pi


def _check(s, v):
    if nearest_int(s, 0.0) == 1:
        raise PoleError("zeta(s, v) has a pole at s = 1")
    if is_nonpositive_int(v, 0.0):
        raise DomainError(f"v = {v} is a non-positive integer")


def hurwitz_zeta(s, v):
    """zeta(s, v) = sum_{n>=0} (v+n)^-s, analytically continued in s.

    Powers use the principal branch. Non-positive integer s is exact via
    Bernoulli polynomials; other s with Re(s) < 0 go through the Hermite
    integral, which avoids the cancellation Euler-Maclaurin suffers there.
    """
    s = complex(s)
    v = complex(v)
    _check(s, v)
    n = nearest_int(s)
    if n is not None and n <= 0:
        return -bernoulli_poly(1 - n, v) / (1 - n)
    if s.real < 0:
        return _hermite(s, v, deriv=False)
    return _euler_maclaurin(s, v)


def hurwitz_zeta_deriv(s, v):
    """d/ds zeta(s, v), by differentiating the Hermite integral."""
    s = complex(s)
    v = complex(v)
    _check(s, v)
    return _hermite(s, v, deriv=True)


def _euler_maclaurin(s, v):
    N = max(10, math.ceil(abs(s)) + 10)
    if v.real < 0:
        N += math.ceil(-v.real)
    return _kernels.hurwitz_em(s, v, N, EM_WEIGHTS[:EM_TERMS])


def _hermite(s, v, deriv):
    # shift v so that Re(v) >= 1/2; the integral needs Re(v) > 0
    head = 0j
    dhead = 0j
    while v.real < 0.5:
        lv = cmath.log(v)
        p = cmath.exp(-s * lv)
        head += p
        dhead -= lv * p
        v += 1
    lv = cmath.log(v)
    vs = cmath.exp(-s * lv)

    real_v = v.imag == 0.0

    def pq(x):
        u = x / v.real if real_v else x / v
        if real_v:
            p = 0.5 * np.log1p(u * u)
            q = np.arctan(u)
            return p, q
        lp = clog1p(1j * u)
        lm = clog1p(-1j * u)
        return 0.5 * (lp + lm), (lp - lm) / 2j

    if not deriv:
        def f(x):
            p, q = pq(x)
            return 2 * np.exp(-s * p) * np.sin(s * q) / np.expm1(_TWO_PI * x)
    else:
        def f(x):
            p, q = pq(x)
            e = np.exp(-s * p)
            return 2 * e * (q * np.cos(s * q) - (lv + p) * np.sin(s * q)) / np.expm1(_TWO_PI * x)

    r = integrate_semi_infinite(Integrand(f, _TWO_PI), tol=_HERMITE_TOL, abs_tol=1e-300)
    if not deriv:
        return head + vs / 2 + v * vs / (s - 1) + vs * r.value
    sm1 = s - 1
    return (
        dhead
        - lv * vs / 2
        - lv * v * vs / sm1
        - v * vs / (sm1 * sm1)
        + vs * r.value
    )
