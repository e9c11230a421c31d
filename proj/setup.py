from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "ptnorm._ptnorm",
    sources=[
        "src/error.cpp",
        "src/numerics.cpp",
        "src/squarewell.cpp",
        "src/pseudometric.cpp",
        "src/oscillator.cpp",
        "src/evolution.cpp",
        "bindings/ptnorm_module.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
