"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension (a NumPy fallback is
selected at import time); set SARLAB_PURE_PYTHON=1 to skip compilation.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Continue with the pure-Python install if the C toolchain is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain failure
            print(f"warning: extension build failed ({exc}); "
                  "falling back to the pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernels")


ext_modules = []
cmdclass = {}
if os.environ.get("SARLAB_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sarlab._core", ["src/sarlab/_core.pyx"])],
            language_level=3,
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError:
        print("warning: Cython not available; installing pure-Python kernels only")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
