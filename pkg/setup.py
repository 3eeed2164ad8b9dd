import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "spiralbw._kernels",
                ["src/spiralbw/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # the package falls back to the pure-numpy kernels at import time
    ext_modules = []

setup(ext_modules=ext_modules)
