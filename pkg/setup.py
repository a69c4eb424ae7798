"""Root build entry point.

The package metadata lives in kacv/setup.py, which maps the package
relative to its own directory. This shim reuses those keywords and
rebases ``package_dir`` so ``pip install .`` works from the project root.
"""

import runpy
from pathlib import Path

import setuptools

HERE = Path(__file__).resolve().parent

_captured = {}
_real_setup = setuptools.setup
setuptools.setup = lambda **kwargs: _captured.update(kwargs)
try:
    runpy.run_path(str(HERE / "kacv" / "setup.py"), run_name="__main__")
finally:
    setuptools.setup = _real_setup

_captured["package_dir"] = {"kacv": "kacv"}
setuptools.setup(**_captured)
