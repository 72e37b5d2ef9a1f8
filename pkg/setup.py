import sys

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the numpy
# implementation in hchain._kernels_py when the extension is missing.
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hchain._kernels",
                ["src/hchain/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython or numpy not available, skipping the compiled kernels", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
