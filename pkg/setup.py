import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("CZORBITS_NO_EXT"):
    ext_modules = cythonize(
        [Extension("czorbits._kernels_cy", ["src/czorbits/_kernels_cy.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
