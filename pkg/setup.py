"""Build script: compiles the optional GF(2) elimination kernel.

The package is fully functional without the extension; ``gausscircuits.gf2``
falls back to the pure-Python kernel when the compiled module is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension("gausscircuits._gf2fast", ["src/gausscircuits/_gf2fast.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level=3) if cythonize else [])
