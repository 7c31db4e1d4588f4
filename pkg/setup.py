from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off: the compiled kernels must be bit-identical to the
# pure-numpy fallback, so FMA contraction is disabled.
extensions = [
    Extension(
        "vehaz._core._speedups",
        ["src/vehaz/_core/_speedups.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(ext_modules=cythonize(extensions, language_level="3"))
