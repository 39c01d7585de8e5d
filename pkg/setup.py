"""Build script: compiles the optional integer kernels.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a failed compile only costs
speed.  Set GLFORM_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("GLFORM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/glform/_kernels/_fast.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
