import os

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or with the env var set)
# the package falls back to the pure-Python backend at import time.
# -ffp-contract=off keeps the C arithmetic bit-identical to CPython floats.
ext_modules = []
if not os.environ.get("QDUALITY_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "qduality._kernels._fast",
                    ["src/qduality/_kernels/_fast.pyx"],
                    extra_compile_args=["-O2", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
