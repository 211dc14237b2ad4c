"""Build script: compiles the SGD inner loop when Cython is available.

Without Cython (or on build failure) the package still installs and falls
back to the pure numpy kernel at import time.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "morphoseed._sgd_inner",
                ["src/morphoseed/_sgd_inner.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
