from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("arikikoike._poly_c", ["src/arikikoike/_poly_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # The compiled kernel is optional; arikikoike._poly_py is a drop-in
    # replacement selected at import time.
    extensions = []

setup(ext_modules=extensions)
