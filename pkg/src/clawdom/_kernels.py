"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
twin. ``use_backend`` switches explicitly (tests and the kernel benchmark
compare both).
"""

from __future__ import annotations

from clawdom import _pykernels

try:
    from clawdom import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = ("compiled", "python")

_active = _ckernels if _ckernels is not None else _pykernels


def available() -> list[str]:
    return [name for name in BACKENDS if name == "python" or _ckernels is not None]


def backend() -> str:
    return "compiled" if _active is _ckernels and _ckernels is not None else "python"


def use_backend(name: str) -> None:
    global _active
    if name == "python":
        _active = _pykernels
    elif name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")


def dominating_search(closed, n, cap):
    return _active.dominating_search(closed, n, cap)


def induced_path(closed, n, k):
    return _active.induced_path(closed, n, k)


def induced_cycle(closed, n, k):
    return _active.induced_cycle(closed, n, k)
