"""Build script: compiles the optional GF(p) rank kernel.

The package works without the extension (a pure-Python fallback is
selected at import time); any build failure is therefore non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
    import numpy

    ext_modules = cythonize(
        [Extension("gradedhecke._rankcore", ["src/gradedhecke/_rankcore.pyx"])],
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.include_dirs.append(numpy.get_include())
except Exception as exc:  # pragma: no cover
    print(f"warning: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
