"""Build script for the optional compiled kernels.

The package is fully functional without the extension; ``eframes._backend``
falls back to the pure-Python kernels when ``eframes._kernels`` is missing.
Set ``EFRAMES_NO_EXT=1`` to skip compilation entirely.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("EFRAMES_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "eframes._kernels",
                    ["src/eframes/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    # Inputs are checked finite, so the C99 inf/nan recovery in complex
                    # multiply and divide (__muldc3 / __divdc3) is not needed.
                    extra_compile_args=["-O3", "-fcx-limited-range"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
