"""Build script: compiles the optional C kernel extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
install falls back to the pure-Python kernels transparently.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compile failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: building the C kernels failed (%s); "
            "installing with pure-Python kernels only." % exc,
            file=sys.stderr,
        )


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/biquandles/kernels/_ckern.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("WARNING: Cython not available; skipping C kernels.", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
