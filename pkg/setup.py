"""Build script: compiles the optional fast kernels.

Set SWAPEQ_NO_EXT=1 to skip the extension entirely; the package then runs
on the pure-Python kernels.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SWAPEQ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/swapeq/_fastkernels.pyx"],
            language_level=3,
        )
    except ImportError:
        pass  # no Cython at build time: pure-Python kernels only

setup(ext_modules=ext_modules)
