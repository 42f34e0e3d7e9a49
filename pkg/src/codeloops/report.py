"""Verdict records and the exhaustive tuple scanner shared by every check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

# cells evaluated per vectorized block
_BLOCK = 1 << 21


@dataclass(frozen=True)
class IdentityReport:
    name: str
    holds: bool
    counterexample: tuple[int, ...] | None
    scanned: int
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def line(self) -> str:
        parts = [self.name, "HOLDS" if self.holds else "FAILS"]
        if self.counterexample is not None:
            parts.append("witness=(" + ",".join(map(str, self.counterexample)) + ")")
        parts.append(f"scanned={self.scanned}")
        if self.note:
            parts.append(f"# {self.note}")
        return " ".join(parts)


def first_violation(size: int, arity: int,
                    violated: Callable[..., np.ndarray]) -> tuple[tuple[int, ...] | None, int]:
    """Scan ``range(size) ** arity`` in lexicographic order.

    ``violated`` receives broadcastable index arrays (one per variable) and
    returns a boolean array marking the failing tuples.  Returns the first
    failing tuple (or None) and the number of tuples scanned.
    """
    total = size ** arity
    if arity == 1:
        bad = np.broadcast_to(violated(np.arange(size)), (size,))
        hit = np.flatnonzero(bad)
        return ((int(hit[0]),) if hit.size else None), total
    inner = size ** (arity - 1)
    step = max(1, _BLOCK // max(inner, 1))
    rest = np.indices((size,) * (arity - 1)).reshape(arity - 1, -1)
    for start in range(0, size, step):
        first = np.arange(start, min(start + step, size))[:, None]
        args = [first] + [r[None, :] for r in rest]
        bad = np.broadcast_to(violated(*args), (first.shape[0], inner))
        flat = np.flatnonzero(bad)
        if flat.size:
            i, j = divmod(int(flat[0]), inner)
            tail = tuple(int(r[j]) for r in rest)
            return (start + i,) + tail, total
    return None, total


def all_violations(size: int, arity: int, violated: Callable[..., np.ndarray],
                   limit: int) -> tuple[list[tuple[int, ...]], int]:
    """Like :func:`first_violation` but collects up to ``limit`` failing tuples.

    Returns the collected tuples and the total number of failures.
    """
    found: list[tuple[int, ...]] = []
    count = 0
    if arity == 1:
        hit = np.flatnonzero(np.broadcast_to(violated(np.arange(size)), (size,)))
        return [(int(h),) for h in hit[:limit]], int(hit.size)
    inner = size ** (arity - 1)
    step = max(1, _BLOCK // max(inner, 1))
    rest = np.indices((size,) * (arity - 1)).reshape(arity - 1, -1)
    for start in range(0, size, step):
        first = np.arange(start, min(start + step, size))[:, None]
        args = [first] + [r[None, :] for r in rest]
        bad = np.broadcast_to(violated(*args), (first.shape[0], inner))
        flat = np.flatnonzero(bad)
        count += int(flat.size)
        for f in flat[:max(0, limit - len(found))]:
            i, j = divmod(int(f), inner)
            found.append((start + i,) + tuple(int(r[j]) for r in rest))
    return found, count
