"""Build script: compiles the optional bit-kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); the compiled kernel speeds up the counting and enumeration
hot loops by roughly an order of magnitude.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "pentaplanar._fastkern",
                ["src/pentaplanar/_fastkern.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: install pure-Python only.
    pass

setup(ext_modules=ext_modules)
