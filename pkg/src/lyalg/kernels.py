"""Backend selection for the GF(p) hot loops.

The compiled extension is used when it imports; otherwise the numpy
fallback in ``_pykernels`` takes over.  Set ``LYALG_PURE_PYTHON=1`` to force
the fallback, or call :func:`use_backend` at runtime (tests and benchmarks
do this to compare both).
"""
import os

from . import _pykernels

try:
    if os.environ.get("LYALG_PURE_PYTHON"):
        raise ImportError("pure python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

_active = _ckernels if _ckernels is not None else _pykernels


def available():
    return ["compiled", "python"] if _ckernels is not None else ["python"]


def backend():
    return _active.BACKEND


def use_backend(name):
    """Switch to ``"compiled"`` or ``"python"``; returns the previous name."""
    global _active
    prev = _active.BACKEND
    if name == "python":
        _active = _pykernels
    elif name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    return prev


def rref_modp(M, p):
    return _active.rref_modp(M, p)


def scan_defmaps_modp(p, dg, dh, cg, tg, ch, th, R, Mu, Psi, Nu, Drm, Dpn, start, stop):
    return _active.scan_defmaps_modp(p, dg, dh, cg, tg, ch, th, R, Mu, Psi, Nu, Drm, Dpn, start, stop)
