import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ARBOR_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "eqarbor._speedups",
            ["src/eqarbor/_speedups.pyx"],
            optional=True,  # fall back to the pure-Python kernels if the build fails
        )
        ext_modules = cythonize(
            [ext],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
