"""Registry of integral identities: LHS integrand, RHS closed form, parameter grid."""
import cmath
import enum
import math
import random
import zlib
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from . import closed_forms as cf
from . import integrands as lhs

PI = math.pi

__all__ = [
    "Family",
    "Identity",
    "IntegralCase",
    "REGISTRY",
    "family_ids",
    "get",
    "lhs_integrand",
    "rhs_value",
    "DEFAULT_SEED",
    "DEFAULT_PERTURBATIONS",
]

DEFAULT_SEED = 0x5EED
DEFAULT_PERTURBATIONS = 50


class Family(enum.Enum):
    MASTER = "Master"
    DIFF_SINH_SINH = "DiffSinhSinh"
    COSH_CASE = "CoshCase"
    XK_SINH_SINH = "XkSinhSinh"
    XK_SINH = "XkSinh"
    MELLIN_TANH_SECH = "MellinTanhSech"
    NEW_ENTRY_351X = "NewEntry351x"
    HURWITZ_A2M1 = "HurwitzA2M1"
    LOG_SINH_SINH = "LogSinhSinh"
    LOG_GAMMA_EXAMPLES = "LogGammaExamples"
    TRIGAMMA_ALG = "TrigammaAlg"
    ZETA_THREE_ALG = "ZetaThreeAlg"


K_GRID = (0, 1, 2, 3)
A_GRID = (1, 2, 3)
M_GRID = (0.5, 1, 1.5)
T_GRID = (-2 * PI / 3, -PI / 2, -PI / 3, -PI / 6, PI / 6, PI / 3, PI / 2, 2 * PI / 3)
T_GRID_GR = (-PI / 2, -PI / 3, -PI / 6, PI / 6, PI / 3, PI / 2)
ALPHA_GRID = (1, cmath.exp(1j * PI / 5))
BETA_GRID = (0.5, 1, 2)
S_GRID = (1.5, 2, 2.5, 3.5)


def _am_pairs():
    return [(a, m) for a in A_GRID for m in M_GRID if a > m]


def _grid_master():
    return [dict(k=k, a=a, m=m, t=t, alpha=al)
            for k, (a, m), t, al in product(K_GRID, _am_pairs(), T_GRID, ALPHA_GRID)]


def _grid_kamt():
    return [dict(k=k, a=a, m=m, t=t) for k, (a, m), t in product(K_GRID, _am_pairs(), T_GRID)]


def _grid_gr_k0():
    bs = [s * b for b in M_GRID for s in (-1, 1)]
    return [dict(a=a, m=b, t=t) for a, b, t in product(A_GRID, sorted(bs), T_GRID_GR) if abs(b) < a]


def _grid_kat():
    return [dict(k=k, a=a, t=t) for k, a, t in product(K_GRID, A_GRID, T_GRID)]


def _grid_mellin():
    return [dict(s=s, a=a) for s, a in product(S_GRID, (1, 2))]


def _grid_kt():
    return [dict(k=k, t=t) for k, t in product(K_GRID, T_GRID)]


def _grid_t():
    return [dict(t=t) for t in T_GRID]


def _grid_ab():
    return [dict(a=a, beta=b) for a, b in product(A_GRID, BETA_GRID)]


def _grid_none():
    return [{}]


@dataclass(frozen=True)
class Identity:
    """One registered identity: integral of lhs(**params) equals rhs(**params).

    flagged marks entries whose displayed closed form is known to be wrong; a
    disagreement there is reported as Discrepant rather than Fail.
    """

    id: str
    family: Family
    params: tuple
    lhs: Callable
    rhs: Callable
    description: str
    grid: Callable = _grid_none
    perturb: tuple = ()
    flagged: bool = False

    def base_grid(self):
        return [dict(p) for p in self.grid()]

    def perturbed_grid(self, n, seed=DEFAULT_SEED):
        """n points: a random base point with every parameter in `perturb` shifted by i*delta.

        |delta| is drawn from [0.05, 0.3]. alpha is only shifted upwards so that
        Im(log alpha) stays non-negative (the side of the cut the identity is on).
        """
        if not self.perturb or n <= 0:
            return []
        rng = random.Random(seed ^ zlib.crc32(self.id.encode()))
        base = self.base_grid()
        out = []
        for _ in range(n):
            p = dict(base[rng.randrange(len(base))])
            for name in self.perturb:
                d = rng.uniform(0.05, 0.3)
                if name != "alpha" and rng.random() < 0.5:
                    d = -d
                p[name] = complex(p[name]) + 1j * d
            out.append(p)
        return out


def _ids(*entries):
    return {e.id: e for e in entries}


REGISTRY = _ids(
    Identity(
        "master", Family.MASTER, ("k", "a", "m", "t", "alpha"),
        lhs.master, cf.rhs_master,
        "sinh(ax)(e^{-mx}(log a - x)^k - e^{mx}(log a + x)^k)/(cosh ax + cos t)^2 via Lerch Phi",
        _grid_master, ("k", "a", "m", "t", "alpha"),
    ),
    Identity(
        "diff-sinh-sinh", Family.DIFF_SINH_SINH, ("k", "a", "m", "t", "alpha"),
        lhs.diff_sinh_sinh, cf.rhs_diff_sinh_sinh,
        "-2 sinh(ax) sinh(mx)((log a - x)^k + (log a + x)^k)/(cosh ax + cos t)^2",
        _grid_master, ("k", "a", "m", "t", "alpha"),
    ),
    Identity(
        "cosh-case", Family.COSH_CASE, ("k", "a", "m", "t"),
        lhs.cosh_case, cf.rhs_cosh_case,
        "x^k sinh(ax) cosh(mx)/(cosh ax + cos t)^2 (pole at even k)",
        _grid_kamt, ("k", "a", "m", "t"),
    ),
    Identity(
        "gr-3.514.4", Family.XK_SINH_SINH, ("k", "a", "m", "t"),
        lhs.xk_sinh_sinh, cf.rhs_xk_sinh_sinh,
        "x^k sinh(ax) sinh(mx)/(cosh ax + cos t)^2 (pole at odd k)",
        _grid_kamt, ("k", "a", "m", "t"),
    ),
    Identity(
        "gr-3.514.4-k0", Family.XK_SINH_SINH, ("a", "m", "t"),
        lambda a, m, t: lhs.xk_sinh_sinh(0, a, m, t), lambda a, m, t: cf.rhs_gr_3514_4(a, m, t),
        "sinh(ax) sinh(bx)/(cosh ax + cos t)^2 = pi b csc t csc(pi b/a) sin(bt/a)/a^2, b = m",
        _grid_gr_k0, ("a", "m", "t"),
    ),
    Identity(
        "xk-sinh", Family.XK_SINH, ("k", "a", "t"),
        lhs.xk_sinh, cf.rhs_xk_sinh,
        "x^k sinh(ax)/(cosh ax + cos t)^2 via Hurwitz zeta (pole at even k)",
        _grid_kat, ("k", "a", "t"),
    ),
    Identity(
        "mellin-tanh-sech", Family.MELLIN_TANH_SECH, ("s", "a"),
        lhs.mellin_tanh_sech, cf.rhs_mellin_tanh_sech,
        "x^(s-1) tanh(ax) sech(ax), Mellin transform via Hurwitz zeta",
        _grid_mellin, ("s", "a"),
    ),
    Identity(
        "new-entry-3.514", Family.NEW_ENTRY_351X, (),
        lhs.new_entry, cf.rhs_new_entry,
        "sinh(x/2) tanh x sech x/(x^2 + pi^2), displayed trigamma closed form",
        flagged=True,
    ),
    Identity(
        "new-entry-3.514-lerch", Family.NEW_ENTRY_351X, (),
        lhs.new_entry, cf.rhs_new_entry_lerch,
        "sinh(x/2) tanh x sech x/(x^2 + pi^2) from the difference form at k=-1, alpha=-1",
    ),
    Identity(
        "hurwitz-a2m1", Family.HURWITZ_A2M1, ("k", "t"),
        lhs.hurwitz_a2m1, cf.rhs_hurwitz_a2m1,
        "x^k sinh x sinh 2x/(cos t + cosh 2x)^2 via Hurwitz zeta (poles at odd k, k=0)",
        _grid_kt, ("k", "t"),
    ),
    Identity(
        "x-sinh-sinh-printed", Family.HURWITZ_A2M1, ("t",),
        lambda t: lhs.hurwitz_a2m1(1, t), cf.rhs_x_sinh_sinh_k0,
        "x sinh x sinh 2x/(cos t + cosh 2x)^2, displayed zeta(-1, .) form",
        _grid_t, flagged=True,
    ),
    Identity(
        "x-sinh-sinh-k1", Family.HURWITZ_A2M1, ("t",),
        lambda t: lhs.hurwitz_a2m1(1, t), cf.rhs_x_sinh_sinh_k1,
        "x sinh x sinh 2x/(cos t + cosh 2x)^2 via d/ds zeta(s, .) at s = -1",
        _grid_t, ("t",),
    ),
    Identity(
        "log-sinh-sinh", Family.LOG_SINH_SINH, ("t",),
        lhs.log_sinh_sinh, cf.rhs_log_sinh_sinh,
        "log x sinh x sinh 2x/(cos t + cosh 2x)^2 via harmonic numbers and log-gamma",
        _grid_t, ("t",),
    ),
    Identity(
        "log-gamma-ex1", Family.LOG_GAMMA_EXAMPLES, (),
        lambda: lhs.log_sinh_sinh(PI / 2), cf.rhs_log_gamma_ex1,
        "log x sinh x tanh 2x sech 2x",
    ),
    Identity(
        "log-gamma-ex2", Family.LOG_GAMMA_EXAMPLES, (),
        lambda: lhs.log_sinh_sinh_cos(0.5, 0.25), cf.rhs_log_gamma_ex2,
        "log x sinh x sinh 2x/(2 cosh 2x + 1)^2",
    ),
    Identity(
        "log-gamma-ex3", Family.LOG_GAMMA_EXAMPLES, (),
        lambda: lhs.log_sinh_sinh_cos(math.sqrt(0.5), 0.25), cf.rhs_log_gamma_ex3,
        "log x sinh x sinh 2x/(2 cosh 2x + sqrt 2)^2, displayed closed form",
        flagged=True,
    ),
    Identity(
        "log-gamma-ex4", Family.LOG_GAMMA_EXAMPLES, (),
        lambda: lhs.log_sinh_sinh_cos(-0.5, 0.25), cf.rhs_log_gamma_ex4,
        "log x sinh x sinh 2x/(2 cosh 2x - 1)^2",
    ),
    Identity(
        "catalan-t0", Family.LOG_GAMMA_EXAMPLES, (),
        lhs.catalan_case, cf.rhs_catalan_case,
        "log x tanh^2 x sech x = 2C/pi + (pi/4) log(2 pi Gamma(3/4)^2/Gamma(1/4)^2)",
    ),
    Identity(
        "trigamma-alg", Family.TRIGAMMA_ALG, ("a", "beta"),
        lhs.trigamma_alg, cf.rhs_trigamma_alg,
        "x tanh(ax) sech(ax)/(beta^2 + x^2) via trigamma",
        _grid_ab, ("a", "beta"),
    ),
    Identity(
        "zeta3-alg", Family.ZETA_THREE_ALG, ("a", "beta"),
        lhs.zeta3_alg, cf.rhs_zeta3_alg,
        "x (x^2 - beta^2) tanh(ax) sech(ax)/(beta^2 + x^2)^2 via trigamma and zeta(3, .)",
        _grid_ab, ("a", "beta"),
    ),
)


def family_ids():
    return list(REGISTRY)


def get(case_id):
    try:
        return REGISTRY[case_id]
    except KeyError:
        raise KeyError(f"unknown identity {case_id!r}; known: {', '.join(REGISTRY)}") from None


@dataclass(frozen=True)
class IntegralCase:
    """An identity id plus concrete parameter values (stored as sorted pairs)."""

    case_id: str
    params: tuple = field(default=())

    @classmethod
    def make(cls, case_id, **params):
        ident = get(case_id)
        want = set(ident.params)
        got = set(params)
        if want != got:
            missing = sorted(want - got)
            extra = sorted(got - want)
            raise ValueError(
                f"{case_id} takes parameters {list(ident.params)}"
                + (f"; missing {missing}" if missing else "")
                + (f"; unexpected {extra}" if extra else "")
            )
        return cls(case_id, tuple(sorted((k, complex(v)) for k, v in params.items())))

    @property
    def identity(self):
        return get(self.case_id)

    @property
    def family(self):
        return self.identity.family

    def param_dict(self):
        return dict(self.params)


def lhs_integrand(case):
    return case.identity.lhs(**case.param_dict())


def rhs_value(case):
    return complex(case.identity.rhs(**case.param_dict()))
