"""Builds the optional compiled kernel backend.

If the extension fails to build or import, the package falls back to the
pure-Python kernels at import time.
"""

from Cython.Build import cythonize
from setuptools import setup

setup(
    ext_modules=cythonize(
        ["src/thompson_f/kernels/_ckernel.pyx"],
        language_level=3,
    ),
)
