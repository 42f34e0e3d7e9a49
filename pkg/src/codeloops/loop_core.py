"""The code loop L(phi) on {0,1} x C.

Elements are encoded as ``idx(a, u) = a * 2**k + u`` where ``u`` is a
codeword index, and multiply by ``(a, u)(b, v) = (a + b + phi(u, v), u + v)``.
Every operation accepts plain ints or numpy index arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .factor_set import FactorSet
from .report import IdentityReport, first_violation

MAX_SCAN_ORDER = 1 << 12
MATERIALIZE_ORDER = 1 << 10


class LoopError(ValueError):
    pass


class OrderTooLarge(LoopError):
    pass


class NotALoop(LoopError):
    pass


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


LEFT, RIGHT = Side.LEFT, Side.RIGHT


class LoopElement(NamedTuple):
    a: int
    u: int


class CodeLoop:
    def __init__(self, phi: FactorSet):
        self.phi = phi
        self.k = phi.k
        self.order = 2 * phi.size
        self._P = phi.table.astype(np.int64)
        self._mask = phi.size - 1
        self._table: np.ndarray | None = None

    def __repr__(self):
        return f"CodeLoop(order={self.order})"

    # encoding
    def encode(self, a: int, u: int) -> int:
        if a not in (0, 1) or not 0 <= u <= self._mask:
            raise LoopError(f"invalid element ({a}, {u})")
        return (a << self.k) | u

    def decode(self, x: int) -> LoopElement:
        if not 0 <= x < self.order:
            raise LoopError(f"element index {x} outside 0..{self.order - 1}")
        return LoopElement(x >> self.k, x & self._mask)

    @property
    def identity(self) -> int:
        return 0

    # arithmetic on indices
    def product(self, x, y):
        k, m, P = self.k, self._mask, self._P
        u, v = x & m, y & m
        a = (x >> k) ^ (y >> k) ^ P[u, v]
        return (a << k) | (u ^ v)

    def ldiv(self, x, y):
        """x \\ y: the z with x * z = y."""
        k, m, P = self.k, self._mask, self._P
        u, v = x & m, y & m
        a = (x >> k) ^ (y >> k) ^ P[u, u ^ v]
        return (a << k) | (u ^ v)

    def rdiv(self, y, x):
        """y / x: the z with z * x = y."""
        k, m, P = self.k, self._mask, self._P
        u, v = x & m, y & m
        a = (x >> k) ^ (y >> k) ^ P[u ^ v, u]
        return (a << k) | (u ^ v)

    def square(self, x):
        u = x & self._mask
        return self._P[u, u] << self.k

    def elements(self) -> np.ndarray:
        return np.arange(self.order)

    def table(self) -> np.ndarray:
        """Materialized Cayley table ``T[x, y] = idx(x * y)``."""
        if self._table is None:
            x = np.arange(self.order)
            t = self.product(x[:, None], x[None, :]).astype(np.int64)
            t.setflags(write=False)
            self._table = t
        return self._table

    def check_loop(self) -> None:
        """Raise NotALoop unless the table is a Latin square with identity 0."""
        t = self.table()
        ref = np.arange(self.order)
        if not (np.array_equal(t[0], ref) and np.array_equal(t[:, 0], ref)):
            raise NotALoop("element 0 is not a two-sided identity")
        if not (np.all(np.sort(t, axis=1) == ref) and np.all(np.sort(t, axis=0) == ref[:, None])):
            raise NotALoop("Cayley table is not a Latin square")


def build_loop(phi: FactorSet, materialize: bool | None = None) -> CodeLoop:
    loop = CodeLoop(phi)
    if materialize is None:
        materialize = loop.order <= MATERIALIZE_ORDER
    if materialize:
        loop.check_loop()
    return loop


def _index(L: CodeLoop, x) -> int:
    return L.encode(*x) if isinstance(x, tuple) else int(x)


def _like(L: CodeLoop, x, z: int):
    return L.decode(z) if isinstance(x, tuple) else z


def mul(L: CodeLoop, x, y):
    """Product of two elements given as LoopElement/(a, u) pairs or indices."""
    return _like(L, x, int(L.product(_index(L, x), _index(L, y))))


def divide(L: CodeLoop, side: Side, x, y):
    """LEFT: z with x*z = y.  RIGHT: z with z*x = y."""
    xi, yi = _index(L, x), _index(L, y)
    z = L.ldiv(xi, yi) if Side(side) is LEFT else L.rdiv(yi, xi)
    return _like(L, x, int(z))


def square_of(L: CodeLoop, x):
    return _like(L, x, int(L.square(_index(L, x))))


def brute_force_divisions(L: CodeLoop) -> tuple[np.ndarray, np.ndarray]:
    """Division tables found by searching the Cayley table.

    Returns ``(left, right)`` with ``left[x, y] = x \\ y`` and
    ``right[x, y] = y / x``.
    """
    t = L.table()
    n = L.order
    left = np.full((n, n), -1, dtype=np.int64)
    right = np.full((n, n), -1, dtype=np.int64)
    for x in range(n):
        for z in range(n):
            left[x, t[x, z]] = z
            right[x, t[z, x]] = z
    if (left < 0).any() or (right < 0).any():
        raise NotALoop("some division has no solution")
    return left, right


def _require_scannable(L: CodeLoop) -> None:
    if L.order > MAX_SCAN_ORDER:
        raise OrderTooLarge(f"order {L.order} exceeds {MAX_SCAN_ORDER}")


@dataclass(frozen=True)
class Nucleus:
    left: frozenset[int]
    middle: frozenset[int]
    right: frozenset[int]

    @property
    def nucleus(self) -> frozenset[int]:
        return self.left & self.middle & self.right


def nucleus(L: CodeLoop) -> Nucleus:
    """Left, middle and right nuclei by a full associator scan."""
    _require_scannable(L)
    n = L.order
    left = np.zeros(n, dtype=bool)
    middle = np.ones(n, dtype=bool)
    right = np.ones(n, dtype=bool)
    y = np.arange(n)[:, None]
    z = np.arange(n)[None, :]
    for x in range(n):
        ok = L.product(L.product(x, y), z) == L.product(x, L.product(y, z))
        left[x] = ok.all()
        middle &= ok.all(axis=1)
        right &= ok.all(axis=0)
    as_set = lambda mask: frozenset(int(i) for i in np.flatnonzero(mask))  # noqa: E731
    return Nucleus(as_set(left), as_set(middle), as_set(right))


def commutant(L: CodeLoop) -> frozenset[int]:
    x = np.arange(L.order)
    comm = (L.product(x[:, None], x[None, :]) == L.product(x[None, :], x[:, None])).all(axis=1)
    return frozenset(int(i) for i in np.flatnonzero(comm))


def center(L: CodeLoop) -> frozenset[int]:
    _require_scannable(L)
    return nucleus(L).nucleus & commutant(L)


def is_nuclear_square(L: CodeLoop, nuc: Nucleus | None = None) -> IdentityReport:
    """Every square lies in the nucleus; witness is the first x whose square does not."""
    _require_scannable(L)
    core = (nuc or nucleus(L)).nucleus
    for x in range(L.order):
        if int(L.square(x)) not in core:
            return IdentityReport("NUCLEAR_SQUARE", False, (x,), x + 1)
    return IdentityReport("NUCLEAR_SQUARE", True, None, L.order)


def find_nonassociative_triple(L: CodeLoop) -> tuple[int, int, int] | None:
    _require_scannable(L)
    witness, _ = first_violation(
        L.order, 3, lambda x, y, z: L.product(L.product(x, y), z) != L.product(x, L.product(y, z)))
    return witness


# ---------------------------------------------------------------------------
# Cayley-table text format: "order=<m>" then m rows of m indices

def format_cayley_table(L: CodeLoop) -> str:
    t = L.table()
    lines = [f"order={L.order}"]
    lines += [" ".join(map(str, row)) for row in t.tolist()]
    return "\n".join(lines) + "\n"


def read_cayley_table(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("order="):
        raise LoopError("missing 'order=<m>' header")
    m = int(lines[0][len("order="):])
    rows = [list(map(int, ln.split())) for ln in lines[1:]]
    if len(rows) != m or any(len(r) != m for r in rows):
        raise LoopError(f"expected {m} rows of {m} entries")
    return np.array(rows, dtype=np.int64)
