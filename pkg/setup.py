"""Builds the optional compiled kernel; the package falls back to pure Python without it."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("QREP_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("qrep._kernel", ["src/qrep/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
