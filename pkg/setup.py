"""Build script: compiles the optional decoding/training kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set DEIDTEXT_NO_EXT=1 to skip the
compile step entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("DEIDTEXT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "deidtext.tagger._kernel",
                    ["src/deidtext/tagger/_kernel.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
