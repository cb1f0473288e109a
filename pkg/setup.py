"""Build hook: compiles the optional planarity extension when Cython is available.

The package is fully functional without the extension; crossplane.planarity
falls back to the pure-Python kernel at import time.
"""

from setuptools import setup

extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        ["src/crossplane/_lr_c.pyx"],
        language_level=3,
    )
except Exception:
    extensions = []

setup(ext_modules=extensions)
