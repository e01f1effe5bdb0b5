"""Build script: compiles the optional canonical-labeling extension.

The package is fully functional without the extension (a pure-Python
implementation of the same search is selected at import time), so any
build failure here is demoted to a warning.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn("skipping compiled kernels: %s" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn("skipping %s: %s" % (ext.name, exc))


def extensions():
    import os

    pyx = "src/grt2/graphs/_canon_cy.pyx"
    if not os.path.exists(pyx):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available, building pure-Python only")
        return []
    return cythonize([pyx], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
