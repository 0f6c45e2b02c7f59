import sys

from setuptools import Extension, setup

# The compiled kernels are an optional fast path.  Everything works on the
# pure-Python twin (flagbound._kernels_py) if this extension is unavailable.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "flagbound._kernels",
                ["src/flagbound/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print("Cython not available; building without compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
