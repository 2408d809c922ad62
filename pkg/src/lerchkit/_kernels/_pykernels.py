"""Pure-Python scalar kernels. Mirrors _ckernels.pyx function for function."""
import cmath
from math import comb


def _small_int(s):
    """Integer value of s when it is an exact integer of modest size, else None."""
    if s.imag == 0 and s.real == int(s.real) and abs(s.real) <= 64:
        return int(s.real)
    return None


def lerch_series(z, s, v, tol, max_terms):
    """Partial sums of sum_n z^n (v+n)^-s.

    Stops once two consecutive terms fall below tol*|sum|. Returns
    (value, terms_used); terms_used == max_terms means no convergence.
    """
    z = complex(z)
    s = complex(s)
    v = complex(v)
    total = 0j
    zn = 1 + 0j
    small = 0
    n = 0
    p = _small_int(s)
    while n < max_terms:
        if p is not None:
            term = zn * (v + n) ** (-p)
        else:
            term = zn * cmath.exp(-s * cmath.log(v + n))
        total += term
        n += 1
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 2:
                return total, n
        else:
            small = 0
        zn *= z
        if zn == 0:
            return total, n
    return total, n


def hurwitz_em(s, v, N, weights):
    """Euler-Maclaurin sum for zeta(s, v) with shift N.

    weights[j] = B_{2j+2}/(2j+2)!. Caller guarantees v+n != 0 for n < N
    and s != 1.
    """
    s = complex(s)
    v = complex(v)
    head = 0j
    for n in range(N):
        head += cmath.exp(-s * cmath.log(v + n))
    w = v + N
    logw = cmath.log(w)
    wms = cmath.exp(-s * logw)
    tail = w * wms / (s - 1) + 0.5 * wms
    # rising factorial s(s+1)...(s+2j-2) / w^(s+2j-1)
    fac = s * wms / w
    winv2 = 1 / (w * w)
    corr = 0j
    for j, b in enumerate(weights):
        corr += b * fac
        k = 2 * j + 1
        fac *= (s + k) * (s + k + 1) * winv2
    return head + tail + corr


def eulerian_row(n):
    """Eulerian numbers A(n, 0..n-1) (A(0) = [1])."""
    row = [1]
    for i in range(1, n + 1):
        new = [0] * i
        for m in range(i):
            a = (m + 1) * row[m] if m < len(row) else 0
            b = (i - m) * row[m - 1] if 0 < m <= len(row) else 0
            new[m] = a + b
        row = new
    return row


def lerch_negint(z, n, v):
    """Phi(z, -n, v) = sum_i C(n,i) v^(n-i) Li_{-i}-type rational terms."""
    z = complex(z)
    v = complex(v)
    w = 1 - z
    if w == 0:
        raise ZeroDivisionError("z = 1")
    total = v ** n / w
    winv = 1 / w
    for i in range(1, n + 1):
        row = eulerian_row(i)
        poly = 0j
        for c in reversed(row):
            poly = poly * z + c
        total += comb(n, i) * v ** (n - i) * z * poly * winv ** (i + 1)
    return total
