import math
import random

import numpy as np
import pytest

from lerchkit import (
    ConvergenceError,
    Integrand,
    Singularity,
    SingularityError,
    integrate_semi_infinite,
    limit_extrapolate,
)
from lerchkit.identities import IntegralCase, lhs_integrand
from lerchkit.identities.closed_forms import rhs_hurwitz_a2m1
from lerchkit.identities.integrands import hyp_ratio
from lerchkit.special import EULER_GAMMA

# Integrands from the acceptance families, one or two points each
ACCEPTANCE_CASES = [
    IntegralCase.make("master", k=1, a=3, m=0.5 + 0.25j, t=math.pi / 3, alpha=1),
    IntegralCase.make("gr-3.514.4-k0", a=2, m=-1.5, t=math.pi / 6),
    IntegralCase.make("mellin-tanh-sech", s=1.5, a=1),
    IntegralCase.make("mellin-tanh-sech", s=3.5, a=2),
    IntegralCase.make("catalan-t0"),
    IntegralCase.make("log-gamma-ex1"),
    IntegralCase.make("log-gamma-ex4"),
    IntegralCase.make("trigamma-alg", a=1, beta=0.5),
    IntegralCase.make("zeta3-alg", a=3, beta=2),
]


def exp_decay(rate=1.0):
    return Integrand(lambda x: np.exp(-rate * x), rate)


def test_exponential():
    r = integrate_semi_infinite(exp_decay(), tol=1e-13)
    assert abs(r.value - 1) < 1e-13
    assert r.error_estimate >= 0
    assert r.evaluations > 0


def test_sinh_sinh_elementary():
    f = Integrand(lambda x: hyp_ratio(x, 1.0, 0.0, 0.5) - hyp_ratio(x, 1.0, 0.0, -0.5), 0.5)
    # 2 sinh(x) sinh(x/2) = sinh(x) (e^{x/2} - e^{-x/2}); the difference above is
    # sinh(x) e^{x/2}/cosh^2 - sinh(x) e^{-x/2}/cosh^2 = 2 sinh x sinh(x/2)/cosh^2 x
    r = integrate_semi_infinite(f, tol=1e-12)
    assert abs(r.value / 2 - math.pi / 2 * math.sin(math.pi / 4)) < 1e-12


def test_sinh_sinh_direct():
    f = Integrand(lambda x: np.sinh(x) * np.sinh(x / 2) / np.cosh(x) ** 2, 0.5)
    r = integrate_semi_infinite(f, tol=1e-12)
    assert abs(r.value - math.pi / 2 * math.sin(math.pi / 4)) < 1e-12


def test_log_singularity():
    f = Integrand(lambda x: np.log(x) * np.exp(-x), 1.0, Singularity.LOGARITHMIC)
    r = integrate_semi_infinite(f, tol=1e-13)
    assert abs(r.value + EULER_GAMMA) < 1e-12


def test_algebraic_singularity():
    # int x^{-1/2} e^{-x} = sqrt(pi)
    f = Integrand(lambda x: x ** -0.5 * np.exp(-x), 1.0)
    assert abs(integrate_semi_infinite(f, tol=1e-12).value - math.sqrt(math.pi)) < 1e-11


def test_complex_integrand():
    # int e^{-(1 - 2i) x} dx = 1/(1 - 2i)
    f = Integrand(lambda x: np.exp(-(1 - 2j) * x), 1.0)
    assert abs(integrate_semi_infinite(f, tol=1e-12).value - 1 / (1 - 2j)) < 1e-12


def test_linearity():
    rng = random.Random(11)
    fs = [lhs_integrand(c) for c in ACCEPTANCE_CASES[:4]]
    for _ in range(5):
        f, g = rng.sample(fs, 2)
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        b = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        h = Integrand(lambda x: a * f.eval(x) + b * g.eval(x), min(f.decay_rate, g.decay_rate))
        tol = 1e-11
        sep = a * integrate_semi_infinite(f, tol).value + b * integrate_semi_infinite(g, tol).value
        both = integrate_semi_infinite(h, tol).value
        assert abs(both - sep) <= 10 * tol * max(abs(sep), 1)


@pytest.mark.parametrize("case", ACCEPTANCE_CASES, ids=lambda c: c.case_id)
def test_refinement_monotone(case):
    f = lhs_integrand(case)
    r = integrate_semi_infinite(f, tol=1e-12)
    floor = 1e-13 * max(abs(r.value), 1e-3)
    h = r.history
    assert len(h) == r.levels
    for prev, cur in zip(h[1:], h[2:]):
        assert cur <= prev or cur <= floor


@pytest.mark.parametrize("case", ACCEPTANCE_CASES, ids=lambda c: c.case_id)
def test_truncation_safety(case):
    # halving the declared decay rate pushes the upper cut of the map out
    f = lhs_integrand(case)
    tol = 1e-10
    a = integrate_semi_infinite(f, tol).value
    g = Integrand(f.eval, f.decay_rate / 2, f.singularity_at_zero)
    b = integrate_semi_infinite(g, tol).value
    assert abs(a - b) <= tol * max(abs(a), 1e-3)


@pytest.mark.parametrize("case", ACCEPTANCE_CASES, ids=lambda c: c.case_id)
def test_declared_decay(case):
    ratio = lhs_integrand(case).check_decay()
    assert ratio < 1e-6


def test_nan_raises_singularity():
    f = Integrand(lambda x: np.where(np.abs(x - 1) < 0.2, np.nan, np.exp(-x)), 1.0)
    with pytest.raises(SingularityError):
        integrate_semi_infinite(f)


def test_pole_on_axis_raises_singularity():
    f = Integrand(lambda x: np.exp(-x) / (x - 1), 1.0)
    with np.errstate(divide="ignore"):
        try:
            integrate_semi_infinite(f)
        except (SingularityError, ConvergenceError):
            pass
        else:
            pytest.fail("a non-integrable interior pole must not produce a value")


def test_level_cap_raises_convergence():
    # slowly decaying tail with a wrongly declared rate converges too slowly
    f = Integrand(lambda x: np.sin(x) ** 2 / (1 + x) ** 1.5, 1.0)
    with pytest.raises(ConvergenceError):
        integrate_semi_infinite(f, tol=1e-12, level_cap=3)


def test_env_level_cap(monkeypatch):
    f = Integrand(lambda x: np.sin(x) ** 2 / (1 + x) ** 1.5, 1.0)
    monkeypatch.setenv("LERCHKIT_MAX_LEVEL", "3")
    with pytest.raises(ConvergenceError, match="after 3 levels"):
        integrate_semi_infinite(f, tol=1e-12)


def test_bad_arguments():
    with pytest.raises(ValueError):
        Integrand(lambda x: x, 0.0)
    with pytest.raises(ValueError):
        integrate_semi_infinite(exp_decay(), tol=0.5)
    with pytest.raises(TypeError):
        integrate_semi_infinite(lambda x: x)


def test_bit_reproducible():
    f = lhs_integrand(ACCEPTANCE_CASES[0])
    a = integrate_semi_infinite(f, 1e-12)
    b = integrate_semi_infinite(f, 1e-12)
    assert a.value == b.value and a.error_estimate == b.error_estimate


class TestLimits:
    def test_sinc(self):
        assert abs(limit_extrapolate(lambda h: math.sin(h) / h, tol=1e-11) - 1) < 1e-11

    def test_one_minus_cos(self):
        g = lambda h: (1 - math.cos(h)) / h ** 2
        assert abs(limit_extrapolate(g, tol=1e-10) - 0.5) < 1e-10

    def test_hurwitz_form_k_to_zero(self):
        # the k -> 0 limit of the a=2, m=1 form exists and is finite
        t = math.pi / 3
        lim = limit_extrapolate(lambda h: rhs_hurwitz_a2m1(h, t), tol=1e-8)
        direct = integrate_semi_infinite(lhs_integrand(IntegralCase.make("hurwitz-a2m1", k=0, t=t)),
                                         1e-12).value
        assert abs(lim - direct) < 1e-8

    def test_disagreement_raises(self):
        with pytest.raises(ConvergenceError):
            limit_extrapolate(lambda h: math.sin(1 / h), tol=1e-10)

