"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so a failed compile only costs speed. Set
ZETAGEOM_REQUIRE_EXT=1 to turn a build failure into a hard error.
"""

import os

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext = Extension(
        "zetageom._kernels",
        ["src/zetageom/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
    ext_modules = cythonize([ext], language_level="3")
except Exception:
    if os.environ.get("ZETAGEOM_REQUIRE_EXT"):
        raise
    ext_modules = []

setup(ext_modules=ext_modules)
