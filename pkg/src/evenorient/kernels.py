"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it imports and the graph
fits in 64-bit vertex masks; otherwise the pure-Python ``_pykernels`` run.
Set ``EVENORIENT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from evenorient import _pykernels
from evenorient._pykernels import CapExceeded

_compiled: ModuleType | None = None
if os.environ.get("EVENORIENT_PURE_PYTHON", "") in ("", "0"):
    try:
        from evenorient import _ckernels as _compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

__all__ = [
    "BACKEND",
    "CapExceeded",
    "alternating_cycles",
    "has_perfect_matching",
    "odd_components",
    "perfect_matchings",
    "use_backend",
]


def _impl(n: int) -> ModuleType:
    if _compiled is not None and n <= 64:
        return _compiled
    return _pykernels


def use_backend(name: str) -> None:
    """Switch backends at runtime (``"compiled"`` or ``"python"``); for tests and benchmarks."""
    global _compiled, BACKEND
    if name == "python":
        _compiled = None
    elif name == "compiled":
        from evenorient import _ckernels

        _compiled = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


def has_perfect_matching(adj: tuple[int, ...], avail: int, memo: dict[int, bool]) -> bool:
    return _impl(len(adj)).has_perfect_matching(adj, avail, memo)


def perfect_matchings(
    adj: tuple[int, ...], edge_ids: list[int], n: int, memo: dict[int, bool]
) -> list[tuple[int, ...]]:
    return _impl(n).perfect_matchings(adj, edge_ids, n, memo)


def alternating_cycles(adj: tuple[int, ...], mate: list[int], n: int, cap: int) -> list[tuple[int, ...]]:
    return _impl(n).alternating_cycles(adj, mate, n, cap)


def odd_components(adj: tuple[int, ...], avail: int) -> tuple[int, int]:
    return _impl(len(adj)).odd_components(adj, avail)
