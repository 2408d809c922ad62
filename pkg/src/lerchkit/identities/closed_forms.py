"""Right-hand sides: closed forms in Lerch Phi, Hurwitz zeta and gamma functions."""
import cmath
import math

from ..errors import PoleError
from ..special import (
    catalan,
    digamma,
    harmonic,
    hurwitz_zeta,
    hurwitz_zeta_deriv,
    lerch_phi,
    log_gamma,
    polygamma,
)
from ..special._elementary import cos_pi, cpow, neg_one_pow, sin_pi

PI = math.pi
I = 1j


def _inv(d, what):
    if d == 0:
        raise PoleError(f"{what} vanishes")
    return 1 / d


def _sin(t):
    t = complex(t)
    if t == 0:
        return 0j
    if t == PI / 2:
        return 1 + 0j
    if t == -PI / 2:
        return -1 + 0j
    return cmath.sin(t)


def _cos(t):
    t = complex(t)
    if t in (PI / 2, -PI / 2):
        return 0j
    return cmath.cos(t)


def csc(t):
    return _inv(_sin(t), f"sin({t})")


def sec(t):
    return _inv(_cos(t), f"cos({t})")


def _c(*xs):
    return tuple(complex(x) for x in xs)


# -- the general Lerch identity and its descendants -----------------------

def rhs_master(k, a, m, t, alpha):
    """Four Lerch terms at z = exp(2 i m pi / a), s in {1-k, -k}."""
    k, a, m, t, alpha = _c(k, a, m, t, alpha)
    la = cmath.log(alpha)
    z = cmath.exp(2 * I * m * PI / a)
    v1 = (-t - I * a * la + PI) / (2 * PI)
    v2 = (t - I * a * la + PI) / (2 * PI)
    sc = csc(t)
    e1 = cmath.exp(I * m * (PI - t) / a)
    e2 = cmath.exp(I * m * (PI - t) / a + 2 * I * m * t / a)
    total = 0j
    if k != 0:
        c1 = k * cpow(2 * PI, k) * cpow(I / a, k - 1) * sc / a ** 2
        total += c1 * (-e1 * lerch_phi(z, 1 - k, v1) + e2 * lerch_phi(z, 1 - k, v2))
    if m != 0:
        c2 = cpow(2 * PI, k + 1) * m * cpow(I / a, k) * sc / a ** 2
        total += c2 * (-e1 * lerch_phi(z, -k, v1) + e2 * lerch_phi(z, -k, v2))
    return total


def rhs_diff_sinh_sinh(k, a, m, t, alpha):
    """The eight-term difference form (m and -m combined)."""
    k, a, m, t, alpha = _c(k, a, m, t, alpha)
    la = cmath.log(alpha)
    zp = cmath.exp(2 * I * m * PI / a)
    zm = cmath.exp(-2 * I * m * PI / a)
    v1 = (-t - I * a * la + PI) / (2 * PI)
    v2 = (t - I * a * la + PI) / (2 * PI)
    sc = csc(t)
    ep = I * m * (PI - t) / a
    et = 2 * I * m * t / a
    E = cmath.exp
    total = 0j
    if k != 0:
        c1 = k * cpow(2 * PI, k) * cpow(I / a, k - 1) * sc / a ** 2
        s = 1 - k
        total += c1 * (
            E(-ep) * lerch_phi(zm, s, v1)
            - E(-ep - et) * lerch_phi(zm, s, v2)
            - E(ep) * lerch_phi(zp, s, v1)
            + E(ep + et) * lerch_phi(zp, s, v2)
        )
    if m != 0:
        c2 = cpow(2 * PI, k + 1) * m * cpow(I / a, k) * sc / a ** 2
        s = -k
        total += c2 * (
            -E(-ep) * lerch_phi(zm, s, v1)
            + E(-ep - et) * lerch_phi(zm, s, v2)
            - E(ep) * lerch_phi(zp, s, v1)
            + E(ep + et) * lerch_phi(zp, s, v2)
        )
    return total


def rhs_cosh_case(k, a, m, t):
    """x^k sinh(ax) cosh(mx) family; 1/(e^{i pi k} - 1) pole at even k."""
    k, a, m, t = _c(k, a, m, t)
    zp = cmath.exp(2 * I * m * PI / a)
    zm = cmath.exp(-2 * I * m * PI / a)
    u1 = (PI - t) / (2 * PI)
    u2 = (t + PI) / (2 * PI)
    E = cmath.exp
    pre = (
        cpow(2, k - 1) * cpow(PI, k) * cpow(I / a, k + 1) * csc(t)
        * E(-I * m * (t + PI) / a) / a
        * _inv(neg_one_pow(k) - 1, "exp(i pi k) - 1")
    )
    et = E(2 * I * m * t / a)
    ak = a * k
    tm = 2 * I * PI * m

    def phi(z, s, u):
        if s == -k and m == 0:
            return 0j  # multiplied by m = 0
        if s == 1 - k and k == 0:
            return 0j  # multiplied by k = 0
        return lerch_phi(z, s, u)

    br = (
        ak * et * phi(zm, 1 - k, u1)
        - ak * phi(zm, 1 - k, u2)
        - tm * (et * phi(zm, -k, u1) - phi(zm, -k, u2))
        + E(2 * I * PI * m / a) * (ak * phi(zp, 1 - k, u1) + tm * phi(zp, -k, u1))
        - E(2 * I * m * (t + PI) / a) * (ak * phi(zp, 1 - k, u2) + tm * phi(zp, -k, u2))
    )
    return pre * br


def rhs_xk_sinh_sinh(k, a, m, t):
    """x^k sinh(ax) sinh(mx) family; 1/((-1)^k + 1) pole at odd k."""
    k, a, m, t = _c(k, a, m, t)
    zp = cmath.exp(2 * I * m * PI / a)
    zm = cmath.exp(-2 * I * m * PI / a)
    u1 = (PI - t) / (2 * PI)
    u2 = (t + PI) / (2 * PI)
    E = cmath.exp
    inv_d = _inv(neg_one_pow(k) + 1, "(-1)^k + 1")
    ia = cpow(I / a, k)
    sc = csc(t)
    e0 = E(-I * m * (t + PI) / a)
    ea = E(2 * I * m * t / a) * e0
    eb = E(2 * I * PI * m / a) * e0
    ec = E(I * m * (t + PI) / a)
    total = 0j
    if m != 0:
        A = cpow(2, k) * cpow(PI, k + 1) * m * ia * sc * inv_d / a ** 2
        total += A * (
            ea * lerch_phi(zm, -k, u1) - e0 * lerch_phi(zm, -k, u2)
            + eb * lerch_phi(zp, -k, u1) - ec * lerch_phi(zp, -k, u2)
        )
    if k != 0:
        B = I * cpow(2, k - 1) * k * cpow(PI, k) * ia * sc * inv_d / a
        total += B * (
            ea * lerch_phi(zm, 1 - k, u1) - e0 * lerch_phi(zm, 1 - k, u2)
            - eb * lerch_phi(zp, 1 - k, u1) + ec * lerch_phi(zp, 1 - k, u2)
        )
    return total


def rhs_gr_3514_4(a, b, t):
    """pi b csc(t) csc(pi b / a) sin(b t / a) / a^2."""
    a, b, t = _c(a, b, t)
    return PI * b * csc(t) * _inv(sin_pi(b / a), "sin(pi b/a)") * cmath.sin(b * t / a) / a ** 2


def rhs_xk_sinh(k, a, t):
    """x^k sinh(ax) family via a Hurwitz zeta difference; csc(pi k/2) pole at even k."""
    k, a, t = _c(k, a, t)
    z1 = hurwitz_zeta(1 - k, (PI - t) / (2 * PI))
    z2 = hurwitz_zeta(1 - k, (t + PI) / (2 * PI))
    return (
        cpow(2, k - 1) * k * cpow(PI, k) * cpow(1 / a, k + 1)
        * _inv(sin_pi(k / 2), "sin(pi k/2)") * csc(t) * (z1 - z2)
    )


def rhs_mellin_tanh_sech(s, a):
    """Mellin transform of tanh(ax) sech(ax); sec(pi s/2) pole at odd s."""
    s, a = _c(s, a)
    d = hurwitz_zeta(2 - s, 0.25) - hurwitz_zeta(2 - s, 0.75)
    return (
        -cpow(2, s - 2) * cpow(PI, s - 1) * (s - 1) * cpow(1 / a, s) * d
        * _inv(cos_pi(s / 2), "cos(pi s/2)")
    )


# -- fixed-parameter entries ----------------------------------------------

def trigamma_bracket_new_entry():
    return (
        -polygamma(1, 3 / 8) + polygamma(1, 5 / 8)
        + polygamma(1, 7 / 8) - polygamma(1, 9 / 8)
    )


def rhs_new_entry():
    """The displayed closed form, evaluated verbatim (it does not match the integral)."""
    return (
        math.sqrt(2) / (32 * PI ** 2) * trigamma_bracket_new_entry()
        + 16 * PI * (math.sqrt(2) + math.log(math.tan(PI / 8)))
    )


def rhs_new_entry_lerch():
    """The same integral from the difference form at k=-1, alpha=-1, a=1, t=pi/2, m=1/2.

    There the bracket (i pi - x)^-1 + (i pi + x)^-1 equals -2 i pi / (x^2 + pi^2),
    so the integral is the difference form divided by 4 pi i.
    """
    return rhs_diff_sinh_sinh(-1, 1, 0.5, PI / 2, -1) / (4j * PI)


# -- a = 2, m = 1 ---------------------------------------------------------

def _quarter_args(t):
    t = complex(t)
    return (
        (PI - t) / (4 * PI),
        (t + PI) / (4 * PI),
        0.75 - t / (4 * PI),
        (t / PI + 3) / 4,
    )


def rhs_hurwitz_a2m1(k, t):
    """Eight zeta terms; 1/((-1)^k + 1) pole at odd k, zeta pole at k = 0."""
    k, t = _c(k, t)
    x1, x2, x3, x4 = _quarter_args(t)
    d = _inv(neg_one_pow(k) + 1, "(-1)^k + 1")
    ek = cmath.exp(I * PI * k / 2)
    c1 = cpow(2, k - 3) * ek * k * cpow(PI, k) * csc(t / 2) * d
    c2 = cpow(2, k - 2) * ek * cpow(PI, k + 1) * sec(t / 2) * d
    Z = hurwitz_zeta
    s1 = 1 - k
    return (
        c1 * (Z(s1, x1) - Z(s1, x2) - Z(s1, x3) + Z(s1, x4))
        + c2 * (Z(-k, x1) + Z(-k, x2) - Z(-k, x3) - Z(-k, x4))
    )


def _zeta_m1_form(t, zeta):
    x1, x2, x3, x4 = _quarter_args(t)
    t = complex(t)
    return (
        PI / 2 * sec(t / 2) * (zeta(-1, x1) + zeta(-1, x2) - zeta(-1, x3) - zeta(-1, x4))
        + csc(t / 2) / 4 * cmath.log(cmath.tan((t + PI) / 4))
    )


def rhs_x_sinh_sinh_k0(t):
    """The displayed zeta(-1, .) + log tan form, evaluated verbatim."""
    return _zeta_m1_form(t, hurwitz_zeta)


def rhs_x_sinh_sinh_k1(t):
    """x sinh(x) sinh(2x)/(cos t + cosh 2x)^2: zeta(-1, .) replaced by its s-derivative."""
    return _zeta_m1_form(t, hurwitz_zeta_deriv)


def rhs_log_sinh_sinh(t):
    """log(x) sinh(x) sinh(2x)/(cos t + cosh 2x)^2 via harmonic numbers and log-gamma."""
    t = complex(t)
    x1, x2, x3, x4 = _quarter_args(t)
    h = (
        harmonic(-(t + PI) / (4 * PI)) - harmonic(-(t + 3 * PI) / (4 * PI))
        + digamma(x2) - digamma(x4)
    )
    lg = (
        math.log(2 * PI) + log_gamma(x3) + log_gamma(x4)
        - log_gamma(x1) - log_gamma(x2)
    )
    return (csc(t / 2) * h + 2 * PI * sec(t / 2) * lg) / 16


def _lg(x):
    return log_gamma(x).real


def rhs_log_gamma_ex1():
    return (
        4 * math.asinh(1)
        + math.sqrt(2) * PI * (math.log(2 * PI) + _lg(5 / 8) + _lg(7 / 8) - _lg(1 / 8) - _lg(3 / 8))
    ) / 8


def rhs_log_gamma_ex2():
    r3 = math.sqrt(3)
    return (
        10 * r3 * PI * math.log(2) + 6 * math.log(64) + 9 * r3 * PI * math.log(PI)
        + 6 * r3 * PI * (_lg(5 / 6) - 2 * _lg(1 / 6))
    ) / 288


def rhs_log_gamma_ex3():
    """Printed identically to the second example although the denominator differs."""
    return rhs_log_gamma_ex2()


def rhs_log_gamma_ex4():
    return (
        4 * math.atanh(1 / math.sqrt(3))
        + PI * (math.log(2 * PI) + _lg(7 / 12) + _lg(11 / 12) - _lg(1 / 12) - _lg(5 / 12))
    ) / 16


def rhs_catalan_case():
    return 2 * catalan() / PI + PI / 4 * (math.log(2 * PI) + 2 * _lg(0.75) - 2 * _lg(0.25))


# -- alpha = exp(i beta), t = pi/2 ----------------------------------------

def _beta_args(a, beta):
    ab = complex(a) * complex(beta)
    return (2 * ab + PI) / (4 * PI), ab / (2 * PI) + 0.75


def rhs_trigamma_alg(a, beta):
    p, q = _beta_args(a, beta)
    return (polygamma(1, p) - polygamma(1, q)) / (4 * PI)


def zeta3_bracket(a, beta):
    p, q = _beta_args(a, beta)
    return hurwitz_zeta(3, q) - hurwitz_zeta(3, p)


def rhs_zeta3_alg(a, beta):
    p, q = _beta_args(a, beta)
    ab = complex(a) * complex(beta)
    return (
        PI * polygamma(1, p) - PI * polygamma(1, q) + ab * zeta3_bracket(a, beta)
    ) / (4 * PI ** 2)
