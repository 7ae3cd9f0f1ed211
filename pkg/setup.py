#!/usr/bin/env python3
"""Build script for the optional compiled elimination kernel.

The package is pure Python; `qschur._speedups` is a Cython twin of
`qschur._kernels_py` that is used automatically when importable.  Build it
in place with

    python setup.py build_ext --inplace

Installation works without Cython or a C compiler; the pure kernel is the
fallback.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qschur._speedups", ["src/qschur/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
