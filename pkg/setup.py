"""Builds the optional compiled extension for the hot series kernels.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so compilation failures are downgraded to warnings.
"""

import os
import sys
import tempfile

from setuptools import setup
from setuptools.command.build_ext import build_ext


def _compiler_supports_openmp(compiler) -> bool:
    src = "#include <omp.h>\nint main(void){return omp_get_max_threads()>0?0:1;}\n"
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "omp_probe.c")
        with open(path, "w") as fh:
            fh.write(src)
        try:
            objs = compiler.compile([path], output_dir=tmp, extra_postargs=["-fopenmp"])
            compiler.link_executable(objs, os.path.join(tmp, "omp_probe"),
                                     extra_postargs=["-fopenmp"])
        except Exception:
            return False
    return True


class OptionalBuildExt(build_ext):
    def build_extensions(self):
        if _compiler_supports_openmp(self.compiler):
            for ext in self.extensions:
                ext.extra_compile_args = ["-O3", "-fopenmp"]
                ext.extra_link_args = ["-fopenmp"]
        else:
            for ext in self.extensions:
                ext.extra_compile_args = ["-O3"]
        super().build_extensions()

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"warning: building qfeat._fastpath failed ({exc}); "
                  "falling back to the pure NumPy backend", file=sys.stderr)


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "qfeat._fastpath",
        sources=["src/qfeat/_fastpath.pyx"],
        include_dirs=[numpy.get_include()],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
