from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/strandtrace/_kernels.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # No Cython at build time: install pure-Python only; the kernel selector
    # in strandtrace.kernels falls back to the interpreted implementations.
    ext_modules = []

setup(ext_modules=ext_modules)
