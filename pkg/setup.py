"""Build script for the optional compiled scoring kernels.

The package works without the extension: groupanneal.kernels falls back to
the pure-Python implementation when the compiled module is absent.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "groupanneal._kernels",
                ["src/groupanneal/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
