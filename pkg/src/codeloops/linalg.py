"""Incremental Gaussian elimination over GF(2) on bit-packed rows.

Each row is a Python ``int``: bit 0 holds the right-hand side and bit ``j``
(``j >= 1``) the coefficient of unknown ``j - 1``.  Pivot rows are kept in
fully reduced form, so reducing a fresh row costs one XOR per pivot column it
touches instead of one per stored pivot.
"""

from __future__ import annotations


class InconsistentSystem(ArithmeticError):
    """Raised when a row reduces to ``0 = 1``."""

    def __init__(self, row_id=None):
        self.row_id = row_id
        super().__init__(f"inconsistent GF(2) system (equation {row_id!r})")


class GF2System:
    """An affine system ``A x = b`` over GF(2), reduced as rows arrive."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        # pivot column (bit position) -> reduced row
        self.pivots: dict[int, int] = {}
        # free column -> set of pivot columns whose row mentions it
        self._users: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: int) -> int:
        pivots = self.pivots
        r = row
        bits = row >> 1
        while bits:
            low = bits & -bits
            col = low.bit_length()
            p = pivots.get(col)
            if p is not None:
                r ^= p
            bits ^= low
        return r

    def add(self, row: int, row_id=None) -> bool:
        """Add an equation; return True if it raised the rank."""
        r = self.reduce(row)
        if r <= 1:
            if r == 1:
                raise InconsistentSystem(row_id)
            return False
        col = r.bit_length() - 1
        mask = 1 << col
        users = self._users
        # eliminate the new pivot column from existing pivot rows
        for pc in users.pop(col, ()):
            old = self.pivots[pc]
            new = old ^ r
            self.pivots[pc] = new
            self._retrack(pc, old, new)
        self.pivots[col] = r
        self._track(col, r ^ mask)
        return True

    def _track(self, pc: int, row: int) -> None:
        bits = row >> 1
        users = self._users
        while bits:
            low = bits & -bits
            users.setdefault(low.bit_length(), set()).add(pc)
            bits ^= low

    def _retrack(self, pc: int, old: int, new: int) -> None:
        changed = (old ^ new) >> 1
        users = self._users
        while changed:
            low = changed & -changed
            c = low.bit_length()
            if new >> c & 1:
                users.setdefault(c, set()).add(pc)
            elif c in users:
                users[c].discard(pc)
            changed ^= low

    def free_columns(self) -> list[int]:
        """Unknown indices (0-based) that carry no pivot."""
        return [j for j in range(self.nvars) if (j + 1) not in self.pivots]

    def particular_solution(self) -> int:
        """Solution with every free unknown set to 0, as a bitmask of unknowns."""
        x = 0
        for col, row in self.pivots.items():
            if row & 1:
                x |= 1 << (col - 1)
        return x

    def nullspace(self) -> list[int]:
        """One homogeneous solution per free unknown, as bitmasks of unknowns."""
        basis = []
        for j in self.free_columns():
            col = j + 1
            x = 1 << j
            for pc in self._users.get(col, ()):
                x |= 1 << (pc - 1)
            basis.append(x)
        return basis
