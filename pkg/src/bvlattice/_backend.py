"""Pick the kernel implementation once, at import.

The compiled ``_core`` extension is used when it was built; setting
``BVLATTICE_PURE=1`` forces the pure-Python kernels regardless.
"""

import os

from bvlattice import _pycore

core = _pycore
if os.environ.get("BVLATTICE_PURE", "") in ("", "0"):
    try:
        from bvlattice import _core as core
    except ImportError:
        pass

BACKEND = core.NAME


def available():
    """Names of every importable backend, pure Python first."""
    names = [_pycore.NAME]
    try:
        from bvlattice import _core
    except ImportError:
        return names
    names.append(_core.NAME)
    return names


def get(name):
    if name == _pycore.NAME:
        return _pycore
    if name == "cython":
        from bvlattice import _core

        return _core
    raise ValueError(f"unknown backend {name!r}")
