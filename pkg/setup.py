"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so compilation failures are tolerated.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ludigroup/_kernels.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on build host
    import sys

    print(f"ludigroup: skipping compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
