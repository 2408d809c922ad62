"""Exact-at-integer trigonometry and integer detection for complex scalars."""
import cmath
import math

INT_TOL = 1e-12


def as_complex(x):
    return complex(x)


def nearest_int(x, tol=INT_TOL):
    """Return the integer that x equals (imag exactly 0, real within tol), else None."""
    x = complex(x)
    if x.imag != 0.0 or not math.isfinite(x.real):
        return None
    n = round(x.real)
    if abs(x.real - n) <= tol:
        return int(n)
    return None


def is_nonpositive_int(x, tol=INT_TOL):
    n = nearest_int(x, tol)
    return n is not None and n <= 0


def sin_pi(x):
    """sin(pi x) with exact zeros at integers (real part reduced mod 2)."""
    x = complex(x)
    n = nearest_int(x, 0.0)
    if n is not None:
        return 0j
    r = math.fmod(x.real, 2.0)
    return cmath.sin(math.pi * complex(r, x.imag))


def cos_pi(x):
    """cos(pi x) with exact zeros at half-integers."""
    x = complex(x)
    if x.imag == 0.0 and (x.real - 0.5) == math.floor(x.real - 0.5) and math.isfinite(x.real):
        return 0j
    r = math.fmod(x.real, 2.0)
    return cmath.cos(math.pi * complex(r, x.imag))


def neg_one_pow(k):
    """(-1)**k on the principal branch, exact for (near-)integer k."""
    n = nearest_int(k)
    if n is not None:
        return complex((-1) ** (n % 2))
    return cmath.exp(1j * math.pi * complex(k))


def cpow(base, expo):
    """Principal-branch power base**expo, with exact handling of integer exponents."""
    base = complex(base)
    n = nearest_int(expo, 0.0)
    if n is not None and abs(n) <= 64:
        return base ** n if n >= 0 else 1.0 / base ** (-n)
    return cmath.exp(complex(expo) * cmath.log(base))
