import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels fall back at import
    cythonize = None


def get_extensions():
    if cythonize is None or os.environ.get("ZETAPHASE_PURE_PYTHON"):
        return []
    ext = Extension(
        "zetaphase._ckernels",
        ["src/zetaphase/_ckernels.pyx"],
        # no -ffast-math: it would reassociate away the compensated sums
        extra_compile_args=["-O3"],
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=get_extensions())
