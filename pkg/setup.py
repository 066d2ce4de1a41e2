"""Build script for the optional compiled F2 kernels.

The package is pure Python except for stableforms.f2._kernels, a small
Cython module holding the bit-packed GF(2) enumeration loops.  If Cython
or a C compiler is unavailable the extension is skipped and the package
falls back to the pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "stableforms.f2._kernels",
                ["src/stableforms/f2/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
