"""Binary linear codes over GF(2).

Codewords are stored as Python ints of at most 64 bits: character ``i`` of the
textual form is bit ``i``.  A :class:`LinearCode` indexes its ``2**k``
codewords by basis combination, so ``codeword_at(i) ^ codeword_at(j) ==
codeword_at(i ^ j)`` and index 0 is always the zero word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

MAX_LENGTH = 64
MAX_DIMENSION = 16


class CodeError(ValueError):
    pass


class BadCharacter(CodeError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"bad character {char!r} at position {position}")


class TooLong(CodeError):
    pass


class LengthMismatch(CodeError):
    pass


class DimensionTooLarge(CodeError):
    pass


class IndexOutOfRange(CodeError, IndexError):
    pass


class GenerationFailed(CodeError):
    pass


@dataclass(frozen=True)
class BitWord:
    bits: int
    length: int

    def __post_init__(self):
        if not 0 <= self.length <= MAX_LENGTH:
            raise TooLong(f"length {self.length} exceeds {MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond word length")

    def __add__(self, other: BitWord) -> BitWord:
        _same_length(self, other)
        return BitWord(self.bits ^ other.bits, self.length)

    __xor__ = __add__

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()


def _same_length(*words: BitWord) -> None:
    if len({w.length for w in words}) > 1:
        raise LengthMismatch("words have different lengths: "
                             + ", ".join(str(w.length) for w in words))


def parse_word(text: str) -> BitWord:
    """Read a row of ``'0'``/``'1'`` characters; character ``i`` becomes bit ``i``."""
    text = text.strip()
    if not text:
        raise CodeError("empty word")
    if len(text) > MAX_LENGTH:
        raise TooLong(f"word of length {len(text)} exceeds {MAX_LENGTH}")
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise BadCharacter(i, ch)
    return BitWord(bits, len(text))


def weight(u: BitWord) -> int:
    return u.bits.bit_count()


def dot(u: BitWord, v: BitWord) -> int:
    """Number of coordinates where both ``u`` and ``v`` are 1."""
    _same_length(u, v)
    return (u.bits & v.bits).bit_count()


def triple_count(u: BitWord, v: BitWord, w: BitWord) -> int:
    _same_length(u, v, w)
    return (u.bits & v.bits & w.bits).bit_count()


@dataclass(frozen=True)
class LinearCode:
    """A binary linear code with a fixed basis and codeword indexing.

    ``basis`` holds the independent generator rows in the order they were
    supplied; ``rref`` is the same space in reduced row-echelon form (pivot =
    lowest set bit).  ``words[i]`` is the XOR of the basis rows selected by
    the bits of ``i``.
    """

    length: int
    basis: tuple[int, ...]
    rref: tuple[int, ...] = field(repr=False)
    words: tuple[int, ...] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    k = dimension

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def word(self, i: int) -> BitWord:
        return codeword_at(self, i)

    def basis_words(self) -> list[BitWord]:
        return [BitWord(b, self.length) for b in self.basis]

    def word_array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.uint64)

    def index_of(self, word: BitWord | int) -> int:
        bits = word.bits if isinstance(word, BitWord) else word
        try:
            return self._index[bits]
        except KeyError:
            raise CodeError(f"{BitWord(bits, self.length)} is not a codeword") from None

    @property
    def _index(self) -> dict[int, int]:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {w: i for i, w in enumerate(self.words)}
            object.__setattr__(self, "_index_cache", idx)
        return idx


def _combinations(basis: Sequence[int]) -> tuple[int, ...]:
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    return tuple(words)


def _rref(rows: Iterable[int]) -> tuple[int, ...]:
    pivots: dict[int, int] = {}
    for r in rows:
        for low, p in pivots.items():
            if r & low:
                r ^= p
        if not r:
            continue
        low = r & -r
        for q, p in pivots.items():
            if p & low:
                pivots[q] = p ^ r
        pivots[low] = r
    return tuple(pivots[low] for low in sorted(pivots))


def span(rows: Sequence[BitWord | str]) -> LinearCode:
    """The code generated by ``rows``; dependent rows are dropped."""
    if not rows:
        raise CodeError("span of no rows")
    words = [parse_word(r) if isinstance(r, str) else r for r in rows]
    _same_length(*words)
    n = words[0].length
    basis: list[int] = []
    reduced: dict[int, int] = {}  # lowest bit -> row, echelon on lowest bit
    for w in words:
        r = w.bits
        while r:
            low = r & -r
            if low not in reduced:
                break
            r ^= reduced[low]
        if r:
            reduced[r & -r] = r
            basis.append(w.bits)
    if len(basis) > MAX_DIMENSION:
        raise DimensionTooLarge(f"dimension {len(basis)} exceeds {MAX_DIMENSION}")
    return LinearCode(n, tuple(basis), _rref(basis), _combinations(basis))


def codeword_at(code: LinearCode, i: int) -> BitWord:
    if not 0 <= i < len(code.words):
        raise IndexOutOfRange(f"index {i} outside 0..{len(code.words) - 1}")
    return BitWord(code.words[i], code.length)


@dataclass(frozen=True)
class DoublyEvenVerdict:
    ok: bool
    witness: tuple[BitWord, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "doubly even"
        return " ".join(f"{w} weight={w.weight}" for w in self.witness) + f" ({self.reason})"


def is_doubly_even(code: LinearCode, method: str = "exhaustive") -> DoublyEvenVerdict:
    """Check every codeword weight is 0 mod 4 and every pairwise dot is even.

    ``method="exhaustive"`` scans all words and then all index pairs ``i < j``
    in index order and reports the first violation.  ``method="basis"``
    checks generator weights and pairwise generator dots, which suffices by
    ``wt(u+v) = wt(u) + wt(v) - 2 u.v`` and bilinearity of the dot mod 2.
    """
    n = code.length
    if method == "basis":
        gens = code.basis
        for g in gens:
            if g.bit_count() % 4:
                return DoublyEvenVerdict(False, (BitWord(g, n),), "weight not divisible by 4")
        for i, g in enumerate(gens):
            for h in gens[i + 1:]:
                if (g & h).bit_count() % 2:
                    return DoublyEvenVerdict(False, (BitWord(g, n), BitWord(h, n)),
                                             "odd intersection")
        return DoublyEvenVerdict(True)
    if method != "exhaustive":
        raise ValueError(f"unknown method {method!r}")

    words = code.words
    for w in words:
        if w.bit_count() % 4:
            return DoublyEvenVerdict(False, (BitWord(w, n),), "weight not divisible by 4")
    arr = code.word_array()
    for i, w in enumerate(words):
        odd = np.bitwise_count(arr[i + 1:] & np.uint64(w)) & 1
        hit = np.flatnonzero(odd)
        if hit.size:
            j = i + 1 + int(hit[0])
            return DoublyEvenVerdict(False, (BitWord(w, n), BitWord(words[j], n)),
                                     "odd intersection")
    return DoublyEvenVerdict(True)


def random_doubly_even_code(n: int, k: int, seed: int | random.Random,
                            max_tries: int = 2000) -> LinearCode:
    """Draw a doubly even code of length ``n`` and dimension exactly ``k``.

    Generators of weight divisible by 4 are drawn one at a time and kept when
    they are independent of, and evenly intersect, the ones already kept.  A
    dead end restarts the draw.  Deterministic in ``seed``.
    """
    if n > MAX_LENGTH:
        raise TooLong(f"length {n} exceeds {MAX_LENGTH}")
    if not 0 <= k <= 5:
        raise CodeError(f"dimension {k} outside 0..5")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if k == 0:
        return span([BitWord(0, n)])
    weights = list(range(4, n + 1, 4))
    if not weights:
        raise GenerationFailed(f"no word of weight divisible by 4 at length {n}")
    gens: list[int] = []
    space = {0}
    stale = 0
    for _ in range(max_tries):
        w = rng.choice(weights)
        cand = sum(1 << p for p in rng.sample(range(n), w))
        if (cand in space
                or any((cand & g).bit_count() % 2 for g in gens)):
            stale += 1
            if stale > 50:
                gens, space, stale = [], {0}, 0
            continue
        gens.append(cand)
        space |= {s ^ cand for s in space}
        stale = 0
        if len(gens) == k:
            code = span([BitWord(g, n) for g in gens])
            if code.dimension == k and is_doubly_even(code):
                return code
            gens, space = [], {0}
    raise GenerationFailed(f"no doubly even [{n},{k}] code found in {max_tries} draws")


class ParseError(CodeError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def parse_generator_matrix(text: str) -> list[BitWord]:
    """Rows of a generator matrix; '#' lines and blank lines are skipped.

    Line and column numbers in :class:`ParseError` are 1-based.
    """
    rows: list[BitWord] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        offset = len(raw) - len(raw.lstrip())
        try:
            word = parse_word(line)
        except BadCharacter as e:
            raise ParseError(lineno, offset + e.position + 1, str(e)) from None
        except TooLong as e:
            raise ParseError(lineno, offset + 1, str(e)) from None
        if rows and word.length != rows[0].length:
            raise ParseError(lineno, offset + 1,
                             f"row has length {word.length}, expected {rows[0].length}")
        rows.append(word)
    if not rows:
        raise ParseError(1, 1, "no generator rows")
    return rows
