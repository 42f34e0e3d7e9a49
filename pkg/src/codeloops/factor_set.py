"""Factor sets on doubly even codes.

A factor set is a {0,1}-valued table ``phi[i, j]`` over codeword indices
satisfying, for all codewords u, v, w (indices add by XOR)::

    phi(u, u)                                  = wt(u)/4        (mod 2)   SQUARE
    phi(u, v) + phi(v, u)                      = (u.v)/2        (mod 2)   SYMMETRY
    phi(u, v) + phi(u+v, w) + phi(v, w) + phi(u, v+w) = c(u, v, w) (mod 2) COCYCLE

and normalized so that row 0 and column 0 vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .gf2_code import DimensionTooLarge, LinearCode, is_doubly_even
from .linalg import GF2System, InconsistentSystem
from .report import IdentityReport, all_violations, first_violation

VIOLATION_CAP = 128
MAX_SOLVE_DIMENSION = 8
MAX_RANDOM_DIMENSION = 5

__all__ = [
    "AxiomViolation", "FactorSet", "FactorSpace", "InconsistentSystem",
    "NotDoublyEven", "NotNormalized", "PreconditionNotMet", "ShapeMismatch",
    "ViolationList", "WeakLinearity", "axiom_violations", "derived_congruence_check",
    "factor_set_space", "is_factor_set", "make_factor_table", "random_normalized_phi",
    "solve_factor_set", "weak_linearity", "read_factor_set", "format_factor_set",
]


class FactorSetError(ValueError):
    pass


class ShapeMismatch(FactorSetError):
    pass


class NotNormalized(FactorSetError):
    pass


class NotDoublyEven(FactorSetError):
    pass


class PreconditionNotMet(FactorSetError):
    pass


class FactorSet:
    """Immutable table of phi over codeword-index pairs."""

    def __init__(self, code: LinearCode, table: np.ndarray, verified: bool = False):
        self.code = code
        self.table = table
        self.verified = verified

    @property
    def k(self) -> int:
        return self.code.dimension

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __call__(self, i, j):
        return self.table[i, j]

    def __eq__(self, other):
        if not isinstance(other, FactorSet):
            return NotImplemented
        return self.code == other.code and np.array_equal(self.table, other.table)

    def __repr__(self):
        return f"FactorSet(k={self.k}, verified={self.verified})"

    def __xor__(self, other: FactorSet) -> FactorSet:
        if self.code != other.code:
            raise ShapeMismatch("factor sets live on different codes")
        return make_factor_table(self.code, self.table ^ other.table)


def make_factor_table(code: LinearCode, entries) -> FactorSet:
    n = len(code)
    table = np.array(entries, dtype=np.uint8)
    if table.shape != (n, n):
        raise ShapeMismatch(f"expected {n}x{n} table, got shape {table.shape}")
    if np.any(table > 1):
        raise FactorSetError("entries must be 0 or 1")
    if table[0].any() or table[:, 0].any():
        raise NotNormalized("row and column 0 must be zero")
    table.setflags(write=False)
    return FactorSet(code, table)


# ---------------------------------------------------------------------------
# coordinate statistics on index arrays

def _weights(code: LinearCode) -> np.ndarray:
    return np.bitwise_count(code.word_array()).astype(np.int64)


def _quarter_weight(code: LinearCode) -> np.ndarray:
    """wt(u)/4 mod 2 per codeword index."""
    wt = _weights(code)
    if np.any(wt % 4):
        raise NotDoublyEven("codeword weight not divisible by 4")
    return (wt // 4) & 1


def _half_dot(words: np.ndarray, i, j) -> np.ndarray:
    """(u.v)/2 mod 2 for index arrays i, j."""
    d = np.bitwise_count(words[i] & words[j]).astype(np.int64)
    if np.any(d & 1):
        raise NotDoublyEven("odd intersection between codewords")
    return (d >> 1) & 1


def _triple_parity(words: np.ndarray, i, j, l) -> np.ndarray:
    return np.bitwise_count(words[i] & words[j] & words[l]) & 1


def _require_doubly_even(code: LinearCode) -> None:
    verdict = is_doubly_even(code, method="basis")
    if not verdict:
        raise NotDoublyEven(verdict.describe())


# ---------------------------------------------------------------------------
# axioms

@dataclass(frozen=True)
class AxiomViolation:
    axiom: str  # SQUARE | SYMMETRY | COCYCLE
    indices: tuple[int, ...]
    value: int
    required: int


class ViolationList(list):
    """Capped prefix of violations; ``total`` counts all of them."""

    total: int = 0
    scanned: dict


def axiom_violations(phi: FactorSet, limit: int = VIOLATION_CAP) -> ViolationList:
    """Scan every word, ordered pair and ordered triple against the three axioms."""
    code = phi.code
    _require_doubly_even(code)
    P = phi.table
    n = phi.size
    W = code.word_array()
    qw = _quarter_weight(code)

    out = ViolationList()
    out.total = 0
    out.scanned = {"SQUARE": n, "SYMMETRY": n * n, "COCYCLE": n ** 3}

    def keep(axiom, tuples, count, value, required):
        out.total += count
        for t in tuples[:max(0, limit - len(out))]:
            out.append(AxiomViolation(axiom, t, int(value(*t)), int(required(*t))))

    found, count = all_violations(n, 1, lambda u: P[u, u] != qw[u], limit)
    keep("SQUARE", found, count, lambda u: P[u, u], lambda u: qw[u])

    found, count = all_violations(
        n, 2, lambda u, v: (P[u, v] ^ P[v, u]) != _half_dot(W, u, v), limit)
    keep("SYMMETRY", found, count, lambda u, v: P[u, v] ^ P[v, u],
         lambda u, v: _half_dot(W, u, v))

    def cocycle(u, v, w):
        return P[u, v] ^ P[u ^ v, w] ^ P[v, w] ^ P[u, v ^ w]

    found, count = all_violations(
        n, 3, lambda u, v, w: cocycle(u, v, w) != _triple_parity(W, u, v, w), limit)
    keep("COCYCLE", found, count, cocycle, lambda u, v, w: _triple_parity(W, u, v, w))
    return out


def is_factor_set(phi: FactorSet) -> bool:
    ok = not axiom_violations(phi, limit=0).total
    phi.verified = ok
    return ok


# ---------------------------------------------------------------------------
# construction

def _build_system(code: LinearCode) -> GF2System:
    """Eqs. SQUARE/SYMMETRY/COCYCLE as rows over the unknowns phi(u, v), u, v != 0.

    Unknown ``(u-1)*(n-1) + (v-1)`` sits at bit ``1 + that`` of a row; bit 0
    is the right-hand side.
    """
    n = len(code)
    m = n - 1
    words = code.words
    system = GF2System(m * m)

    def bit(u, v):
        if u and v:
            return 1 << ((u - 1) * m + v)
        return 0

    for u in range(n):
        system.add(bit(u, u) ^ ((words[u].bit_count() >> 2) & 1), ("SQUARE", u))
    for u in range(n):
        for v in range(u, n):
            system.add(bit(u, v) ^ bit(v, u) ^ (((words[u] & words[v]).bit_count() >> 1) & 1),
                       ("SYMMETRY", u, v))
    bits = [[bit(u, v) for v in range(n)] for u in range(n)]
    for u in range(n):
        bu = bits[u]
        wu = words[u]
        for v in range(n):
            head = bu[v]
            buv = bits[u ^ v]
            bv = bits[v]
            wuv = wu & words[v]
            for w in range(n):
                row = (head ^ buv[w] ^ bv[w] ^ bu[v ^ w]
                       ^ ((wuv & words[w]).bit_count() & 1))
                system.add(row, ("COCYCLE", u, v, w))
    return system


def _mask_to_table(n: int, mask: int) -> np.ndarray:
    m = n - 1
    table = np.zeros((n, n), dtype=np.uint8)
    if m:
        bits = np.array([mask >> j & 1 for j in range(m * m)], dtype=np.uint8)
        table[1:, 1:] = bits.reshape(m, m)
    return table


def _check_solvable(code: LinearCode) -> None:
    if code.dimension > MAX_SOLVE_DIMENSION:
        raise DimensionTooLarge(
            f"solver supports k <= {MAX_SOLVE_DIMENSION}, got {code.dimension}")
    _require_doubly_even(code)


@dataclass
class FactorSpace:
    """All factor sets on a code: ``particular`` plus any XOR of ``basis`` tables."""

    particular: FactorSet
    basis: list[np.ndarray] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def member(self, coefficients) -> FactorSet:
        table = self.particular.table.copy()
        for c, b in zip(coefficients, self.basis):
            if c:
                table ^= b
        return make_factor_table(self.particular.code, table)

    def __iter__(self) -> Iterator[FactorSet]:
        for combo in range(1 << self.dimension):
            yield self.member(combo >> i & 1 for i in range(self.dimension))


def solve_factor_set(code: LinearCode) -> FactorSet:
    """The factor set obtained by Gaussian elimination with free unknowns at 0."""
    _check_solvable(code)
    system = _build_system(code)
    phi = make_factor_table(code, _mask_to_table(len(code), system.particular_solution()))
    if not is_factor_set(phi):
        raise InconsistentSystem("solution fails the axiom scan")
    return phi


def factor_set_space(code: LinearCode) -> FactorSpace:
    _check_solvable(code)
    system = _build_system(code)
    n = len(code)
    phi = make_factor_table(code, _mask_to_table(n, system.particular_solution()))
    is_factor_set(phi)
    basis = []
    for x in system.nullspace():
        b = _mask_to_table(n, x)
        b.setflags(write=False)
        basis.append(b)
    return FactorSpace(phi, basis)


def random_normalized_phi(code: LinearCode, seed) -> FactorSet:
    """Uniform random normalized table; usually not a factor set."""
    if code.dimension > MAX_RANDOM_DIMENSION:
        raise DimensionTooLarge(f"random tables limited to k <= {MAX_RANDOM_DIMENSION}")
    rng = np.random.default_rng(seed)
    n = len(code)
    table = np.zeros((n, n), dtype=np.uint8)
    table[1:, 1:] = rng.integers(0, 2, size=(n - 1, n - 1), dtype=np.uint8)
    return make_factor_table(code, table)


# ---------------------------------------------------------------------------
# weak linearity and its consequences

@dataclass(frozen=True)
class WeakLinearity:
    lwl: bool
    rwl: bool
    lwl_failures: tuple[tuple[int, int], ...] = ()
    rwl_failures: tuple[tuple[int, int], ...] = ()

    @property
    def wl(self) -> bool:
        return self.lwl and self.rwl


def _lwl_residual(P):
    return lambda u, v: P[u ^ v, u] ^ P[u, u] ^ P[v, u]


def _rwl_residual(P):
    return lambda u, v: P[u, u ^ v] ^ P[u, u] ^ P[u, v]


def weak_linearity(phi: FactorSet, limit: int = VIOLATION_CAP) -> WeakLinearity:
    """lwl: phi(u+v, u) = phi(u,u) + phi(v,u); rwl: phi(u, u+v) = phi(u,u) + phi(u,v)."""
    P = phi.table
    n = phi.size
    lf, _ = all_violations(n, 2, _lwl_residual(P), limit)
    rf, _ = all_violations(n, 2, _rwl_residual(P), limit)
    return WeakLinearity(not lf, not rf, tuple(lf), tuple(rf))


DERIVED_CONGRUENCES = ("LWL_CONG", "RWL_CONG", "WL_SUM", "WL_EQUIV", "WL_EQUIV_RAW")
# printed forms known to be false on factor sets; reported but never gating
ERRATA = {"WL_EQUIV": "probable erratum: lwl gives phi(u+v,v) = phi(v,v) + phi(u,v); "
                      "see WL_EQUIV_RAW"}


def derived_congruence_check(phi: FactorSet, name: str) -> IdentityReport:
    """Check a pairwise consequence of weak linearity over all (u, v).

    LWL_CONG  phi(u+v, u) = phi(u,u) + (u.v)/2 + phi(u,v)      needs lwl
    RWL_CONG  phi(u, u+v) = phi(u,u) + (u.v)/2 + phi(v,u)      needs rwl
    WL_SUM    phi(u+v, u) + phi(u, u+v) = (u.v)/2               needs wl
    WL_EQUIV  [phi(u,u+v) = phi(u+v,v)] iff [phi(u,v) = phi(v,u)]  needs wl
    WL_EQUIV_RAW  same with phi(u+v,u) in place of phi(u+v,v)   needs wl

    WL_EQUIV is evaluated exactly as printed and fails at (0, u) whenever
    phi(u, u) = 1; WL_EQUIV_RAW is the form that follows from weak linearity.
    """
    if name not in DERIVED_CONGRUENCES:
        raise ValueError(f"unknown congruence {name!r}")
    if not (phi.verified or is_factor_set(phi)):
        raise PreconditionNotMet("table is not a factor set")
    weak = weak_linearity(phi, limit=1)
    need = {"LWL_CONG": ("lwl", weak.lwl), "RWL_CONG": ("rwl", weak.rwl)}.get(
        name, ("wl", weak.wl))
    if not need[1]:
        raise PreconditionNotMet(f"{name} requires a {need[0]} factor set")

    P = phi.table
    W = phi.code.word_array()

    if name == "LWL_CONG":
        def bad(u, v):
            return P[u ^ v, u] != (P[u, u] ^ _half_dot(W, u, v) ^ P[u, v])
    elif name == "RWL_CONG":
        def bad(u, v):
            return P[u, u ^ v] != (P[u, u] ^ _half_dot(W, u, v) ^ P[v, u])
    elif name == "WL_SUM":
        def bad(u, v):
            return (P[u ^ v, u] ^ P[u, u ^ v]) != _half_dot(W, u, v)
    elif name == "WL_EQUIV":
        def bad(u, v):
            return (P[u, u ^ v] == P[u ^ v, v]) != (P[u, v] == P[v, u])
    else:
        def bad(u, v):
            return (P[u, u ^ v] == P[u ^ v, u]) != (P[u, v] == P[v, u])

    witness, scanned = first_violation(phi.size, 2, bad)
    note = ERRATA.get(name, "") if witness is not None else ""
    return IdentityReport(name, witness is None, witness, scanned, note)


# ---------------------------------------------------------------------------
# text format: "k=<k>" then 2**k rows of 2**k characters

def format_factor_set(phi: FactorSet) -> str:
    rows = ["".join("1" if x else "0" for x in row) for row in phi.table]
    return "\n".join([f"k={phi.k}", *rows]) + "\n"


def read_factor_set(code: LinearCode, text: str) -> FactorSet:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("k="):
        raise FactorSetError("missing 'k=<dimension>' header")
    k = int(lines[0][2:])
    if k != code.dimension:
        raise ShapeMismatch(f"table is for k={k}, code has k={code.dimension}")
    rows = lines[1:]
    if len(rows) != 1 << k or any(len(r) != 1 << k for r in rows):
        raise ShapeMismatch(f"expected {1 << k} rows of {1 << k} characters")
    if any(set(r) - {"0", "1"} for r in rows):
        raise FactorSetError("table rows must contain only '0' and '1'")
    return make_factor_table(code, [[int(c) for c in r] for r in rows])
