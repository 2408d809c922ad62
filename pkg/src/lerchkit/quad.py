"""Double-exponential quadrature on [0, inf) and Richardson limits.

The exp-sinh substitution x = exp(u - exp(-u)) sends [0, inf) to the real
line with doubly-exponential decay at both ends, so the trapezoid rule in u
converges very fast for analytic integrands with exponential decay, with or
without an integrable (algebraic or logarithmic) singularity at 0.
"""
import enum
import math
import os
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConvergenceError, SingularityError

__all__ = [
    "Singularity",
    "Integrand",
    "QuadResult",
    "Direction",
    "integrate_semi_infinite",
    "limit_extrapolate",
    "max_level",
]

H0 = 0.5
MAX_LEVEL = 12
NODE_BUDGET = 2 ** 15
U_FLOOR = -6.5  # exp(u - exp(-u)) underflows just below this


class Singularity(enum.Enum):
    NONE = "None"
    LOGARITHMIC = "Logarithmic"


@dataclass(frozen=True)
class Integrand:
    """A vectorised integrand on (0, inf).

    eval maps a float64 array of abscissae to a complex (or real) array.
    decay_rate is the exponential rate of decay at infinity.
    """

    eval: Callable
    decay_rate: float
    singularity_at_zero: Singularity = Singularity.NONE

    def __post_init__(self):
        if not (self.decay_rate > 0 and math.isfinite(self.decay_rate)):
            raise ValueError(f"decay_rate must be positive, got {self.decay_rate!r}")

    def check_decay(self):
        """Ratio |f(40/r)| / |f(20/r)|, expected to be around exp(-20)."""
        r = self.decay_rate
        f = np.abs(np.asarray(self.eval(np.array([20.0 / r, 40.0 / r])), dtype=complex))
        if f[0] == 0:
            return 0.0
        return float(f[1] / f[0])


@dataclass
class QuadResult:
    value: complex
    error_estimate: float
    evaluations: int
    levels: int = 0
    history: list = field(default_factory=list, repr=False)


class Direction(enum.Enum):
    FROM_ABOVE = "FromAbove"


def max_level():
    """Refinement cap, optionally lowered with LERCHKIT_MAX_LEVEL."""
    env = os.environ.get("LERCHKIT_MAX_LEVEL")
    if env:
        try:
            return max(2, min(MAX_LEVEL, int(env)))
        except ValueError:
            pass
    return MAX_LEVEL


def _x_and_weight(u):
    e = np.exp(-u)
    x = np.exp(u - e)
    return x, x * (1.0 + e)


def _cfsum(vals):
    vals = np.asarray(vals)
    if np.iscomplexobj(vals):
        return complex(math.fsum(vals.real.tolist()), math.fsum(vals.imag.tolist()))
    return complex(math.fsum(vals.tolist()), 0.0)


class _Grid:
    """Trapezoid grid u = j*h anchored at 0, contributions cached per level."""

    def __init__(self, f, u_lo, u_hi):
        self.f = f
        self.u_lo = u_lo
        self.u_hi = u_hi
        self.contrib = np.zeros(0, dtype=complex)
        self.evaluations = 0

    def _eval(self, u):
        if u.size == 0:
            return np.zeros(0, dtype=complex)
        x, w = _x_and_weight(u)
        fx = np.asarray(self.f(x), dtype=complex)
        if fx.shape != x.shape:
            fx = np.broadcast_to(fx, x.shape).astype(complex)
        self.evaluations += u.size
        bad = ~np.isfinite(fx)
        if bad.any():
            where = float(x[bad][0])
            raise SingularityError(f"integrand is not finite at x = {where!r}")
        return fx * w

    def nodes(self, h, odd_only):
        j0 = math.ceil(self.u_lo / h)
        j1 = math.floor(self.u_hi / h)
        j = np.arange(j0, j1 + 1)
        if odd_only:
            j = j[j % 2 != 0]
        return j * h

    def extend(self, h):
        """Widen [u_lo, u_hi] while the end contributions are not negligible."""
        scale = np.max(np.abs(self.contrib)) if self.contrib.size else 0.0
        grew = False
        for _ in range(40):
            top = self._eval(np.array([self.u_hi]))[0]
            if abs(top) <= 1e-18 * max(scale, 1e-300):
                break
            self.u_hi += 1.0
            grew = True
        for _ in range(8):
            if self.u_lo <= U_FLOOR:
                break
            bot = self._eval(np.array([self.u_lo]))[0]
            if abs(bot) <= 1e-18 * max(scale, 1e-300):
                break
            self.u_lo = max(U_FLOOR, self.u_lo - 0.5)
            grew = True
        return grew


def integrate_semi_infinite(f, tol=1e-10, abs_tol=1e-14, level_cap=None):
    """Integrate f over (0, inf) by exp-sinh quadrature.

    Halves the step until two successive levels agree to
    max(tol*|value|, abs_tol) (or to the rounding floor of the sum).
    The error estimate is the difference of the last two levels.
    """
    if not isinstance(f, Integrand):
        raise TypeError("f must be an Integrand")
    if not (1e-16 <= tol <= 1e-2):
        raise ValueError(f"tol out of range: {tol!r}")
    cap = max_level() if level_cap is None else min(level_cap, max_level())

    u_hi = math.log(50.0 / f.decay_rate) + 1.0
    u_lo = -4.5 if f.singularity_at_zero is Singularity.NONE else -5.0
    grid = _Grid(f.eval, u_lo, u_hi)

    h = H0
    u = grid.nodes(h, False)
    vals = grid._eval(u)
    grid.contrib = vals
    if grid.extend(h):
        u = grid.nodes(h, False)
        vals = grid._eval(u)
    grid.contrib = vals
    sums = [h * _cfsum(vals)]
    history = []
    est = math.inf
    for level in range(1, cap + 1):
        h /= 2
        new = grid._eval(grid.nodes(h, True))
        grid.contrib = np.concatenate([grid.contrib, new])
        if grid.contrib.size > NODE_BUDGET:
            raise ConvergenceError(
                f"node budget {NODE_BUDGET} exhausted at level {level} (estimate {est:.3g})"
            )
        s = h * _cfsum(grid.contrib)
        est = abs(s - sums[-1])
        sums.append(s)
        history.append(est)
        floor = 64 * np.finfo(float).eps * h * float(np.sum(np.abs(grid.contrib)))
        if level >= 2 and est <= max(tol * abs(s), abs_tol, floor):
            return QuadResult(s, est, grid.evaluations, level, history)
    raise ConvergenceError(
        f"no agreement to tol={tol:g} after {cap} levels (last estimate {est:.3g})"
    )


def limit_extrapolate(g, direction=Direction.FROM_ABOVE, tol=1e-10, h0=0.125, steps=7):
    """Richardson extrapolation of g(h) as h -> 0+, from g(h0/2^i), i < steps.

    Assumes an expansion in integer powers of h. Raises ConvergenceError when
    the last two diagonal extrapolants differ by more than tol.
    """
    if direction is not Direction.FROM_ABOVE:
        raise ValueError("only one-sided limits from above are supported")
    table = []
    for i in range(steps):
        h = h0 / 2 ** i
        row = [complex(g(h))]
        for j in range(1, i + 1):
            f = 2.0 ** j
            row.append(row[j - 1] + (row[j - 1] - table[i - 1][j - 1]) / (f - 1))
        table.append(row)
    best = table[-1][-1]
    prev = table[-2][-2]
    if abs(best - prev) > tol:
        raise ConvergenceError(
            f"extrapolants disagree: |{best} - {prev}| = {abs(best - prev):.3g} > {tol:g}"
        )
    return best
