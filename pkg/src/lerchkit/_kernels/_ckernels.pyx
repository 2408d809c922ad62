# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the scalar kernels in _pykernels."""
from libc.math cimport fabs
cdef extern from "complex.h":
    double complex cexp(double complex)
    double complex clog(double complex)
    double cabs(double complex)

from math import comb
from ._pykernels import eulerian_row


cdef double complex _powi(double complex x, long n):
    # same scheme as CPython's complex power with an integer exponent
    cdef double complex r = 1, b = x
    cdef long m = n if n >= 0 else -n
    while m > 0:
        if m & 1:
            r = r * b
        b = b * b
        m >>= 1
    if n < 0:
        return 1 / r
    return r


def lerch_series(z, s, v, double tol, long max_terms):
    cdef double complex cz = z, cs = s, cv = v
    cdef double complex total = 0, zn = 1, term
    cdef long n = 0
    cdef int small = 0
    cdef long p = 0
    cdef bint int_s = cs.imag == 0 and cs.real == <long>cs.real and fabs(cs.real) <= 64
    if int_s:
        p = <long>cs.real
    while n < max_terms:
        if int_s:
            term = zn * _powi(cv + n, -p)
        else:
            term = zn * cexp(-cs * clog(cv + n))
        total += term
        n += 1
        if cabs(term) <= tol * cabs(total):
            small += 1
            if small >= 2:
                return complex(total), n
        else:
            small = 0
        zn *= cz
        if zn == 0:
            return complex(total), n
    return complex(total), n


def hurwitz_em(s, v, long N, weights):
    cdef double complex cs = s, cv = v
    cdef double complex head = 0, w, logw, wms, tail, fac, winv2, corr = 0
    cdef long n, j, k
    cdef double b
    for n in range(N):
        head += cexp(-cs * clog(cv + n))
    w = cv + N
    logw = clog(w)
    wms = cexp(-cs * logw)
    tail = w * wms / (cs - 1) + 0.5 * wms
    fac = cs * wms / w
    winv2 = 1 / (w * w)
    for j in range(len(weights)):
        b = weights[j]
        corr += b * fac
        k = 2 * j + 1
        fac *= (cs + k) * (cs + k + 1) * winv2
    return complex(head + tail + corr)


def lerch_negint(z, long n, v):
    cdef double complex cz = z, cv = v
    cdef double complex w = 1 - cz, winv, total, poly
    cdef long i
    if w == 0:
        raise ZeroDivisionError("z = 1")
    winv = 1 / w
    total = cv ** n * winv
    for i in range(1, n + 1):
        poly = 0
        for c in reversed(eulerian_row(i)):
            poly = poly * cz + <double>c
        total += <double>comb(n, i) * cv ** (n - i) * cz * poly * winv ** (i + 1)
    return complex(total)
