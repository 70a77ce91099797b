import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in lametop._kernel_py when the extension is absent.
ext_modules = []
if os.environ.get("LAMETOP_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "lametop._speedups",
                    ["src/lametop/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
