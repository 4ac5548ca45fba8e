"""Build the optional Cython kernels; the package works without them."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SYMCERT_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("symcert._kernels._ckernels",
                       ["src/symcert/_kernels/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
