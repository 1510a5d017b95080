import os

from setuptools import Extension, setup

# The compiled core is optional: without Cython (or with DEJEAN_NO_EXT=1) the
# package installs pure Python and selects the fallback kernels at import.
ext_modules = []
if not os.environ.get("DEJEAN_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("dejean._speedups", ["src/dejean/_speedups.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
