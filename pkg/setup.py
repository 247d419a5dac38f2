"""Build the optional Cython kernel.

The extension is marked optional: if it fails to compile, the package still
installs and falls back to the pure-Python elimination at import time.
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
                "arrspec._kernels",
                ["src/arrspec/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
