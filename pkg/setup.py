"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (pure-Python kernels are selected at
import time); set INTREC_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("INTREC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/intrec/_kernels/fast.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover - build-env dependent
        print("intrec: skipping compiled kernels (%s)" % exc)
        ext_modules = []

setup(ext_modules=ext_modules)
