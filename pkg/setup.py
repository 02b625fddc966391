"""Build hook for the optional compiled kernel.

The package is pure Python by default. When Cython and a C compiler are
available, softtopo._kernels_cy is compiled for a faster bitmask core;
any build failure falls back to the pure backend silently.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """Never let a missing compiler break the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"skipping compiled kernel ({exc}); using pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"skipping {ext.name} ({exc}); using pure-Python backend")


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - build environment dependent
        return []
    ext = Extension("softtopo._kernels_cy", ["src/softtopo/_kernels_cy.pyx"])
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions(), cmdclass={"build_ext": _OptionalBuildExt})
