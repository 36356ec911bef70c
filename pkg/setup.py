"""Build script: compiles the optional fast kernels.

The package works without the extension (a pure-Python fallback with the
same interface is selected at import time), so a missing compiler or a
missing Cython only costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ffseq._core",
                ["src/ffseq/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
