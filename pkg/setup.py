import sys

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    # no compiler toolchain: the numpy kernels are used at import time
    ext_modules = []
else:
    # inline complex products instead of calling the C99 inf/nan-aware helper
    flags = [] if sys.platform == "win32" else ["-O3", "-fcx-limited-range"]
    ext_modules = cythonize(
        [Extension("dirac4._ckernels", ["src/dirac4/_ckernels.pyx"],
                   include_dirs=[numpy.get_include()], extra_compile_args=flags)],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
