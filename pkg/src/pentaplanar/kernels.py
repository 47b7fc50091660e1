"""Backend selection for the bit kernels.

The compiled extension (`_fastkern`, Cython) is used when it was built and
the graph fits in 64-bit rows; otherwise the pure-Python twin (`_purekern`)
takes over.  Setting PENTAPLANAR_KERNEL=pure forces the fallback, which is
how the benchmark and the parity tests exercise both sides.
"""

from __future__ import annotations

import os

from . import _purekern

try:
    from . import _fastkern  # type: ignore[attr-defined]
except ImportError:
    _fastkern = None

_FAST_MAX_N = 64
_FAST_MAX_FLAT = 512


def _force_pure() -> bool:
    return os.environ.get("PENTAPLANAR_KERNEL", "auto").lower() == "pure"


def compiled_available() -> bool:
    return _fastkern is not None


def backend_name() -> str:
    return "pure" if (_fastkern is None or _force_pure()) else "compiled"


def backends() -> dict[str, object]:
    """All importable backends, keyed by name (for benchmarks and tests)."""
    out: dict[str, object] = {"pure": _purekern}
    if _fastkern is not None:
        out["compiled"] = _fastkern
    return out


def _pick(n: int):
    if _fastkern is None or _force_pure() or n > _FAST_MAX_N:
        return _purekern
    return _fastkern


def cycle_counts(rows: tuple[int, ...], n: int) -> tuple[int, int, int]:
    return _pick(n).cycle_counts(rows, n)


def c5_per_edge(rows: tuple[int, ...], n: int) -> list[int]:
    return _pick(n).c5_per_edge(rows, n)


def paths3_between(rows: tuple[int, ...], n: int, u: int, v: int) -> int:
    return _pick(n).paths3_between(rows, n, u, v)


def paths3_per_edge(rows: tuple[int, ...], n: int) -> list[int]:
    return _pick(n).paths3_per_edge(rows, n)


def embedding_min_code(rot: tuple[tuple[int, ...], ...], n: int) -> tuple[int, ...]:
    mod = _pick(n)
    if mod is not _purekern and sum(len(r) for r in rot) > _FAST_MAX_FLAT:
        mod = _purekern
    return mod.embedding_min_code(rot, n)
