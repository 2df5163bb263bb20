"""Build script: compiles the optional C extension for the hot kernels.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set DAISY_NO_EXT=1 to skip the
build, e.g. on machines without a C toolchain.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"warning: skipping compiled kernels ({exc}); "
                  "falling back to pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not compile {ext.name} ({exc}); "
                  "falling back to pure Python")


ext_modules = []
cmdclass = {}
if os.environ.get("DAISY_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("daisy._core", ["src/daisy/_core.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError:
        print("warning: Cython unavailable; building without compiled kernels")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
