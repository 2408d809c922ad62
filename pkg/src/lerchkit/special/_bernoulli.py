"""Bernoulli numbers (exact) and the float tables derived from them."""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

_MAX = 80


@lru_cache(maxsize=None)
def bernoulli_fraction(n):
    """B_n as an exact fraction, with the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > _MAX:
        raise ValueError(f"Bernoulli numbers are tabulated up to n={_MAX}")
    return _table()[n]


@lru_cache(maxsize=1)
def _table():
    b = [Fraction(1)]
    for m in range(1, _MAX + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += comb(m + 1, k) * b[k]
        b.append(-acc / (m + 1))
    return tuple(b)


BERNOULLI = tuple(float(x) for x in _table())

# B_{2j} / (2j)! for j = 1..10, the Euler-Maclaurin correction weights.
EM_WEIGHTS = tuple(float(_table()[2 * j] / factorial(2 * j)) for j in range(1, 11))

# B_{2k} / (2k (2k-1)), Stirling series for log-gamma.
STIRLING = tuple(float(_table()[2 * k] / (2 * k * (2 * k - 1))) for k in range(1, 11))

# B_{2k} / (2k), asymptotic series for digamma.
DIGAMMA_ASYMP = tuple(float(_table()[2 * k] / (2 * k)) for k in range(1, 11))


def bernoulli_poly(n, x):
    """Bernoulli polynomial B_n(x) for complex x, by Horner's rule."""
    table = _table()
    acc = 0j
    # B_n(x) = sum_k C(n, k) B_{n-k} x^k
    for k in range(n, -1, -1):
        acc = acc * x + float(comb(n, k) * table[n - k])
    return acc
