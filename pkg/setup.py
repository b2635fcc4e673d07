from setuptools import Extension, setup

# The compiled kernels are an optional speedup; without Cython (or a working
# compiler) the package installs with the pure-Python kernels only.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("chainent.kernels._fast",
                   ["src/chainent/kernels/_fast.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)
