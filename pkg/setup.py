import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the accelerator extension if possible, fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"skipping compiled kernels ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"failed to build {ext.name} ({exc}); pure-Python fallback will be used")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/grothmn/_terms_cy.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
