"""Left-hand-side integrands, written to stay finite for large x."""
import cmath
import math

import numpy as np

from ..errors import DomainError
from ..quad import Integrand, Singularity

DENOM_FLOOR = 1e-6


def hyp_ratio(x, a, cos_t, c=0.0):
    """sinh(a x) exp(c x) / (cosh(a x) + cos_t)^2, overflow-free.

    For Re(a) x >= 1 it is rewritten as
    2 exp((c - a) x) (1 - e^-2ax) / (1 + 2 cos_t e^-ax + e^-2ax)^2.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape, dtype=complex)
    small = a.real * x < 1.0
    if small.any():
        xs = x[small]
        out[small] = np.sinh(a * xs) * np.exp(c * xs) / (np.cosh(a * xs) + cos_t) ** 2
    big = ~small
    if big.any():
        xb = x[big]
        e = np.exp(-a * xb)
        e2 = e * e
        out[big] = 2 * np.exp((c - a) * xb) * (1 - e2) / (1 + 2 * cos_t * e + e2) ** 2
    return out


def sinh_sinh_ratio(x, a, m, cos_t):
    """sinh(a x) sinh(m x) / (cosh(a x) + cos_t)^2."""
    return 0.5 * (hyp_ratio(x, a, cos_t, m) - hyp_ratio(x, a, cos_t, -m))


def cosh_ratio(x, a, m, cos_t):
    """sinh(a x) cosh(m x) / (cosh(a x) + cos_t)^2."""
    return 0.5 * (hyp_ratio(x, a, cos_t, m) + hyp_ratio(x, a, cos_t, -m))


def xpow(x, k):
    """x**k for positive x; integer k stays exact."""
    k = complex(k)
    if k.imag == 0 and k.real == int(k.real) and abs(k.real) < 64:
        return x ** int(k.real)
    return np.exp(k * np.log(x))


def cpow_arr(base, k):
    """Principal-branch base**k for a complex array."""
    k = complex(k)
    if k.imag == 0 and k.real == int(k.real) and abs(k.real) < 64:
        n = int(k.real)
        return base ** n if n >= 0 else 1.0 / base ** (-n)
    return np.exp(k * np.log(base))


def _cos(t):
    t = complex(t)
    if t == math.pi / 2 or t == -math.pi / 2:
        return 0j
    return cmath.cos(t)


def min_denominator(a, cos_t, span=None, n=4001):
    """min over x >= 0 of |cosh(ax) + cos t| / max(1, |cosh(ax)|), by sampling."""
    a = complex(a)
    if span is None:
        span = 40.0 / max(a.real, 1e-3)
    x = np.linspace(0.0, span, n)
    ch = np.cosh(np.minimum(a.real * x, 700.0) + 1j * a.imag * x)
    d = np.abs(ch + cos_t) / np.maximum(1.0, np.abs(ch))
    i = int(np.argmin(d))
    lo = x[max(i - 1, 0)]
    hi = x[min(i + 1, n - 1)]
    xf = np.linspace(lo, hi, 2001)
    chf = np.cosh(a * xf)
    df = np.abs(chf + cos_t) / np.maximum(1.0, np.abs(chf))
    return float(min(d.min(), df.min()))


def _require(cond, msg):
    if not cond:
        raise DomainError(msg)


def _check_hyp(a, m, t):
    a, m, t = complex(a), complex(m), complex(t)
    _require(a.real > abs(m.real), f"need Re(a) > |Re(m)| (a={a}, m={m})")
    _require(-math.pi < t.real < math.pi, f"need -pi < Re(t) < pi (t={t})")
    _require(
        min_denominator(a, _cos(t)) > DENOM_FLOOR,
        f"cosh(a x) + cos(t) nearly vanishes on the real axis (a={a}, t={t})",
    )
    return a, m, t


def master(k, a, m, t, alpha):
    a, m, t = _check_hyp(a, m, t)
    alpha = complex(alpha)
    _require(alpha != 0, "alpha must be non-zero")
    la = cmath.log(alpha)
    c = _cos(t)

    def f(x):
        return (hyp_ratio(x, a, c, -m) * cpow_arr(la - x, k)
                - hyp_ratio(x, a, c, m) * cpow_arr(la + x, k))

    return Integrand(f, a.real - abs(m.real))


def diff_sinh_sinh(k, a, m, t, alpha):
    a, m, t = _check_hyp(a, m, t)
    alpha = complex(alpha)
    _require(alpha != 0, "alpha must be non-zero")
    la = cmath.log(alpha)
    c = _cos(t)

    def f(x):
        br = cpow_arr(la - x, k) + cpow_arr(la + x, k)
        return -2 * sinh_sinh_ratio(x, a, m, c) * br

    return Integrand(f, a.real - abs(m.real))


def cosh_case(k, a, m, t):
    a, m, t = _check_hyp(a, m, t)
    c = _cos(t)
    return Integrand(lambda x: xpow(x, k) * cosh_ratio(x, a, m, c), a.real - abs(m.real))


def xk_sinh_sinh(k, a, m, t):
    a, m, t = _check_hyp(a, m, t)
    c = _cos(t)
    return Integrand(lambda x: xpow(x, k) * sinh_sinh_ratio(x, a, m, c), a.real - abs(m.real))


def xk_sinh(k, a, t):
    a, _, t = _check_hyp(a, 0, t)
    c = _cos(t)
    return Integrand(lambda x: xpow(x, k) * hyp_ratio(x, a, c), a.real)


def mellin_tanh_sech(s, a):
    # tanh(ax) sech(ax) = sinh(ax) / cosh(ax)^2
    a = complex(a)
    _require(a.real > 0, f"need Re(a) > 0 (a={a})")
    _require(complex(s).real > 0, f"need Re(s) > 0 (s={s})")
    _require(min_denominator(a, 0j) > DENOM_FLOOR, f"cosh(a x) nearly vanishes (a={a})")
    return Integrand(lambda x: xpow(x, complex(s) - 1) * hyp_ratio(x, a, 0j), a.real)


def new_entry():
    """sinh(x/2) tanh(x) sech(x) / (x^2 + pi^2)."""
    def f(x):
        return sinh_sinh_ratio(x, 1 + 0j, 0.5 + 0j, 0j) / (x * x + math.pi ** 2)
    return Integrand(f, 0.5)


def hurwitz_a2m1(k, t):
    return xk_sinh_sinh(k, 2, 1, t)


def log_sinh_sinh(t, scale=1.0):
    """scale * log(x) sinh(x) sinh(2x) / (cos t + cosh 2x)^2."""
    a, m, t = _check_hyp(2, 1, t)
    c = _cos(t)

    def f(x):
        return scale * np.log(x) * sinh_sinh_ratio(x, a, m, c)

    return Integrand(f, 1.0, Singularity.LOGARITHMIC)


def log_sinh_sinh_cos(cos_t, scale=1.0):
    """Same family with cos t given directly (for printed denominators)."""
    c = complex(cos_t)

    def f(x):
        return scale * np.log(x) * sinh_sinh_ratio(x, 2 + 0j, 1 + 0j, c)

    return Integrand(f, 1.0, Singularity.LOGARITHMIC)


def catalan_case():
    """log(x) tanh(x)^2 sech(x) = 2 log(x) sinh(x) sinh(2x) / (1 + cosh 2x)^2."""
    return log_sinh_sinh_cos(1.0, scale=2.0)


def _check_beta(a, beta):
    a, beta = complex(a), complex(beta)
    _require(a.real > 0, f"need Re(a) > 0 (a={a})")
    _require(beta.real > 0, f"need Re(beta) > 0 (beta={beta})")
    _require(min_denominator(a, 0j) > DENOM_FLOOR, f"cosh(a x) nearly vanishes (a={a})")
    return a, beta


def trigamma_alg(a, beta):
    """x tanh(ax) sech(ax) / (beta^2 + x^2)."""
    a, beta = _check_beta(a, beta)
    b2 = beta * beta
    return Integrand(lambda x: x * hyp_ratio(x, a, 0j) / (b2 + x * x), a.real)


def zeta3_alg(a, beta):
    """x (x - beta)(x + beta) tanh(ax) sech(ax) / (beta^2 + x^2)^2."""
    a, beta = _check_beta(a, beta)
    b2 = beta * beta

    def f(x):
        x2 = x * x
        return x * (x2 - b2) * hyp_ratio(x, a, 0j) / (b2 + x2) ** 2

    return Integrand(f, a.real)
