from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "parikh._speedups",
                ["src/parikh/_speedups.pyx"],
                extra_compile_args=["-O3"],
                # a failed compile falls back to the pure-Python kernels
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
