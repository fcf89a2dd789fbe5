"""Build script: compiles the optional bit-kernel extension.

Set HEXMATCH_NO_EXT=1 to skip the extension entirely; the package then runs
on the pure-Python kernel fallback.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HEXMATCH_NO_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hexmatch._kernels._bitkern",
                ["src/hexmatch/_kernels/_bitkern.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
