import os
import random
import subprocess
import sys

import pytest

from lerchkit import _kernels
from lerchkit._kernels import _pykernels as py
from lerchkit.special._bernoulli import EM_WEIGHTS

try:
    from lerchkit._kernels import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def samples(n=50, seed=3):
    rng = random.Random(seed)
    for _ in range(n):
        z = complex(rng.uniform(-0.75, 0.75), rng.uniform(-0.75, 0.75)) * 0.95
        s = complex(rng.uniform(-3, 4), rng.uniform(-1, 1))
        v = complex(rng.uniform(0.1, 4), rng.uniform(-1, 1))
        yield z, s, v


def close(a, b, tol):
    return abs(a - b) <= tol * max(abs(a), abs(b), 1e-300)


@needs_ext
def test_series_backends_agree():
    for z, s, v in samples():
        a, na = cy.lerch_series(z, s, v, 2.0 ** -55, 10 ** 6)
        b, nb = py.lerch_series(z, s, v, 2.0 ** -55, 10 ** 6)
        assert close(a, b, 1e-13)
        assert abs(na - nb) <= 1


@needs_ext
def test_integer_s_series_backends_agree():
    for z, _, v in samples(20):
        for s in (1, 2, 3):
            a, _ = cy.lerch_series(z, s, v, 2.0 ** -55, 10 ** 6)
            b, _ = py.lerch_series(z, s, v, 2.0 ** -55, 10 ** 6)
            assert close(a, b, 1e-14)


@needs_ext
def test_euler_maclaurin_backends_agree():
    for _, s, v in samples():
        N = 10 + int(abs(s)) + 10
        a = cy.hurwitz_em(s, v, N, EM_WEIGHTS[:8])
        b = py.hurwitz_em(s, v, N, EM_WEIGHTS[:8])
        assert close(a, b, 1e-13)


@needs_ext
def test_negint_backends_agree():
    for z, _, v in samples(30):
        for w in (z, 1 / z if z else 2.0):
            for n in range(7):
                assert close(cy.lerch_negint(w, n, v), py.lerch_negint(w, n, v), 1e-13)


def test_negint_pole_at_one():
    with pytest.raises(ZeroDivisionError):
        py.lerch_negint(1.0, 2, 0.5)


def test_eulerian_rows():
    assert py.eulerian_row(1) == [1]
    assert py.eulerian_row(3) == [1, 4, 1]
    assert py.eulerian_row(4) == [1, 11, 11, 1]


def test_backend_selection_env():
    env = dict(os.environ, LERCHKIT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import lerchkit; print(lerchkit.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_pure_python_gives_same_values():
    code = ("import lerchkit as L; print(repr(L.lerch_phi(0.3+0.4j, 1.5, 0.8)),"
            " repr(L.hurwitz_zeta(2.5, 0.3)), repr(L.lerch_phi(2j, -3, 0.5)))")
    env = dict(os.environ, LERCHKIT_PURE_PYTHON="1")
    pure = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                          text=True, check=True).stdout.split()
    import lerchkit as L
    here = [L.lerch_phi(0.3 + 0.4j, 1.5, 0.8), L.hurwitz_zeta(2.5, 0.3), L.lerch_phi(2j, -3, 0.5)]
    for p, h in zip(pure, here):
        assert close(complex(p), h, 1e-13)


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")
    if cy is not None and not os.environ.get("LERCHKIT_PURE_PYTHON"):
        assert _kernels.BACKEND == "cython"
