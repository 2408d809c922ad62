"""Accurate complex log1p for numpy arrays (numpy's loses digits near 0)."""
import numpy as np


def clog1p(w):
    w = np.asarray(w, dtype=complex)
    out = np.log1p(w)
    small = np.abs(w) < 0.01
    if small.any():
        ws = w[small]
        # alternating Taylor series; |w| < 0.01 so 9 terms reach 1e-18
        acc = np.zeros_like(ws)
        for n in range(9, 0, -1):
            acc = ws * (1.0 / n - acc)
        out[small] = acc
    return out
