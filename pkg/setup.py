from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("toricrank._kernels", ["src/toricrank/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback kernels are used when the extension is absent.
    ext_modules = []

setup(ext_modules=ext_modules)
