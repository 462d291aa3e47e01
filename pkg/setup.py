"""Build script: compiles the optional exact-linear-algebra extension.

The package runs without the extension (a pure-Python kernel is selected at
import time); set CONFSPACE_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CONFSPACE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/confspace/_core.pyx"],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
