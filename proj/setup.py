from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "saitotree._saitotree",
    sources=[
        "python/module.cpp",
        "src/matrix.cpp",
        "src/tree.cpp",
        "src/dicriticity.cpp",
        "src/curves.cpp",
        "src/analysis.cpp",
        "src/moduli.cpp",
        "src/io.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
