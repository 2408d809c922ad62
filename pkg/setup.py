"""Builds the optional Cython kernels; without Cython the package is pure Python."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("LERCHKIT_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("lerchkit._kernels._ckernels", ["src/lerchkit/_kernels/_ckernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
