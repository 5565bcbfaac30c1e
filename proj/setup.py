# Builds the extension by delegating to the CMake project, which is the one
# source of truth for compiler flags and sources. The _mcdg target writes its
# module to <build>/python/mcdg/; build_ext copies it into the wheel layout.

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source = Path(__file__).resolve().parent
        build = Path(self.build_temp).resolve() / "cmake"
        build.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build),
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DCMAKE_BUILD_TYPE=Release",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build), "--target", "_mcdg", "-j"],
            check=True,
        )
        built = sorted((build / "python" / "mcdg").glob("_mcdg.*"))
        if not built:
            raise RuntimeError("CMake did not produce the _mcdg extension module")
        dest = Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], dest)


setup(
    ext_modules=[CMakeExtension("mcdg._mcdg")],
    cmdclass={"build_ext": CMakeBuild},
)
