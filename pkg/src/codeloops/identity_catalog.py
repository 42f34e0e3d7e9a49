"""Loop identities, factor-set discriminants, and the classification of L(phi).

Two independent routes decide the same questions:

* loop level: an identity is evaluated on every tuple of loop elements using
  only the product and the two divisions of :class:`~codeloops.loop_core.CodeLoop`;
* factor-set level: a discriminant is a GF(2) expression in phi over codewords
  that vanishes identically exactly when the matching identity holds.

:func:`classify` runs both and records whether each expected equivalence was
observed on the instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .factor_set import (FactorSet, NotDoublyEven, PreconditionNotMet, WeakLinearity, _half_dot,
                         _quarter_weight, _require_doubly_even, is_factor_set,
                         weak_linearity)
from .gf2_code import DimensionTooLarge
from .loop_core import (CodeLoop, OrderTooLarge, build_loop, find_nonassociative_triple,
                        is_nuclear_square, nucleus)
from .report import IdentityReport, first_violation

MAX_IDENTITY_ORDER = 1 << 12
MAX_DISCRIMINANT_DIMENSION = 5
MAX_CLASSIFY_DIMENSION = 4


class NotAFactorSet(PreconditionNotMet):
    pass


class IndexOutOfRange(IndexError):
    pass


# ---------------------------------------------------------------------------
# loop identities

class Identity(NamedTuple):
    name: str
    arity: int
    sides: Callable  # (L, x, y, z) -> (lhs, rhs)


def _id(name, arity):
    def deco(fn):
        IDENTITIES[name] = Identity(name, arity, fn)
        return fn
    return deco


IDENTITIES: dict[str, Identity] = {}


@_id("LC1", 3)
def _lc1(L, x, y, z):
    m = L.product
    return m(m(x, x), m(y, z)), m(m(x, m(x, y)), z)


@_id("LC2", 3)
def _lc2(L, x, y, z):
    m = L.product
    return m(m(x, m(x, y)), z), m(x, m(x, m(y, z)))


@_id("LC3", 3)
def _lc3(L, x, y, z):
    m = L.product
    return m(m(m(x, x), y), z), m(x, m(x, m(y, z)))


@_id("RC1", 3)
def _rc1(L, x, y, z):
    m = L.product
    return m(m(y, z), m(x, x)), m(y, m(m(z, x), x))


@_id("RC2", 3)
def _rc2(L, x, y, z):
    m = L.product
    return m(m(m(y, z), x), x), m(y, m(m(z, x), x))


@_id("RC3", 3)
def _rc3(L, x, y, z):
    # printed with a stray trailing factor; read as (yz.x)x = y(z.xx)
    m = L.product
    return m(m(m(y, z), x), x), m(y, m(z, m(x, x)))


@_id("CLOOP", 3)
def _cloop(L, x, y, z):
    m = L.product
    return m(y, m(x, m(x, z))), m(m(m(y, x), x), z)


@_id("EXTRA1", 3)
def _extra1(L, x, y, z):
    m = L.product
    return m(m(m(x, y), z), x), m(x, m(y, m(z, x)))


@_id("EXTRA2", 3)
def _extra2(L, x, y, z):
    m = L.product
    return m(m(x, y), m(x, z)), m(x, m(m(y, x), z))


@_id("EXTRA3", 3)
def _extra3(L, x, y, z):
    m = L.product
    return m(m(y, x), m(z, x)), m(m(y, m(x, z)), x)


@_id("LA", 2)
def _la(L, x, y, z=None):
    m = L.product
    return m(x, m(x, y)), m(m(x, x), y)


@_id("RA", 2)
def _ra(L, x, y, z=None):
    m = L.product
    return m(m(y, x), x), m(y, m(x, x))


@_id("FLEX", 2)
def _flex(L, x, y, z=None):
    m = L.product
    return m(x, m(y, x)), m(m(x, y), x)


@_id("MOUFANG1", 3)
def _moufang1(L, x, y, z):
    m = L.product
    return m(z, m(x, m(z, y))), m(m(m(z, x), z), y)


@_id("MOUFANG2", 3)
def _moufang2(L, x, y, z):
    m = L.product
    return m(x, m(z, m(y, z))), m(m(m(x, z), y), z)


@_id("MOUFANG3", 3)
def _moufang3(L, x, y, z):
    m = L.product
    return m(m(z, x), m(y, z)), m(m(z, m(x, y)), z)


@_id("MOUFANG4", 3)
def _moufang4(L, x, y, z):
    m = L.product
    return m(m(z, x), m(y, z)), m(z, m(m(x, y), z))


@_id("LB", 3)
def _lb(L, x, y, z):
    m = L.product
    return m(x, m(y, m(x, z))), m(m(x, m(y, x)), z)


@_id("RB", 3)
def _rb(L, x, y, z):
    m = L.product
    return m(m(m(z, x), y), x), m(z, m(m(x, y), x))


@_id("LCC", 3)
def _lcc(L, x, y, z):
    m = L.product
    return m(z, m(y, x)), m(L.rdiv(m(z, y), z), m(z, x))


@_id("RCC", 3)
def _rcc(L, x, y, z):
    m = L.product
    return m(m(x, y), z), m(m(x, z), L.ldiv(z, m(y, z)))


COMPOSITES: dict[str, tuple[str, ...]] = {
    "MOUFANG": ("MOUFANG1", "MOUFANG2", "MOUFANG3", "MOUFANG4"),
    "LC": ("LC1", "LC2", "LC3"),
    "RC": ("RC1", "RC2", "RC3"),
    "C": ("LC1", "LC2", "LC3", "RC1", "RC2", "RC3"),
    "EXTRA": ("EXTRA1", "EXTRA2", "EXTRA3"),
    "ALTERNATIVE": ("LA", "RA"),
    "CC": ("LCC", "RCC"),
    "LEFT_BURN": ("LB", "LCC"),
    "RIGHT_BURN": ("RB", "RCC"),
    "BURN": ("MOUFANG1", "MOUFANG2", "MOUFANG3", "MOUFANG4", "LCC", "RCC"),
}


def check_identity(L: CodeLoop, name: str) -> IdentityReport:
    """Evaluate an identity (or composite) on every tuple of loop elements.

    The witness is the first failing tuple ``(x, y[, z])`` of element indices
    in lexicographic order.  For a composite the first failing member decides
    the witness and is named in the note.
    """
    if name in COMPOSITES:
        scanned = 0
        for member in COMPOSITES[name]:
            rep = check_identity(L, member)
            scanned += rep.scanned
            if not rep.holds:
                return IdentityReport(name, False, rep.counterexample, scanned, f"via {member}")
        return IdentityReport(name, True, None, scanned)
    try:
        ident = IDENTITIES[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}") from None
    if ident.arity == 3 and L.order > MAX_IDENTITY_ORDER:
        raise OrderTooLarge(f"order {L.order} too large for a triple scan")

    def bad(*args):
        lhs, rhs = ident.sides(L, *args)
        return lhs != rhs

    witness, scanned = first_violation(L.order, ident.arity, bad)
    return IdentityReport(name, witness is None, witness, scanned)


# ---------------------------------------------------------------------------
# factor-set discriminants; arguments are codeword indices, + is XOR

class Discriminant(NamedTuple):
    name: str
    arity: int
    expr: Callable  # (P, u, v, w) -> bits


DISCRIMINANTS: dict[str, Discriminant] = {}


def _disc(name, arity):
    def deco(fn):
        DISCRIMINANTS[name] = Discriminant(name, arity, fn)
        return fn
    return deco


@_disc("A1", 2)
def _a1(P, u, v, w=0):
    return P[u, u ^ v] ^ P[u, v] ^ P[u, u]


@_disc("A2", 3)
def _a2(P, u, v, w):
    return P[u, v] ^ P[u, u ^ v] ^ P[u, v ^ w] ^ P[u, u ^ v ^ w]


@_disc("A3", 3)
def _a3(P, u, v, w):
    return P[u, u] ^ P[u, v ^ w] ^ P[u, u ^ v ^ w]


@_disc("B1", 2)
def _b1(P, u, v, w=0):
    # printed as B1(u, w); the second argument plays the role of w
    return P[u, u] ^ P[v, u] ^ P[v ^ u, u]


@_disc("B2", 3)
def _b2(P, u, v, w):
    return P[w, u] ^ P[w ^ u, u] ^ P[v ^ w, u] ^ P[v ^ w ^ u, u]


@_disc("B3", 3)
def _b3(P, u, v, w):
    return P[u, u] ^ P[v ^ w, u] ^ P[v ^ w ^ u, u]


@_disc("D_PAPER", 3)
def _d_paper(P, u, v, w):
    return P[v, u] ^ P[u, w] ^ P[v ^ u, v] ^ P[u, u ^ w]


@_disc("D_RAW", 3)
def _d_raw(P, u, v, w):
    return P[v, u] ^ P[u, w] ^ P[v ^ u, u] ^ P[u, u ^ w]


@_disc("E1", 3)
def _e1(P, u, v, w):
    return P[u, v] ^ P[w, u] ^ P[u ^ v, w] ^ P[v ^ w, u] ^ P[v, w ^ u] ^ P[u, v ^ w]


@_disc("E2", 3)
def _e2(P, u, v, w):
    return (P[u, u] ^ P[u, v] ^ P[v, u] ^ P[u, w] ^ P[v ^ u, w] ^ P[u, v ^ w]
            ^ P[u ^ v, u ^ w])


@_disc("E3", 3)
def _e3(P, u, v, w):
    return (P[u, u] ^ P[v, u] ^ P[u, w] ^ P[w, u] ^ P[v, u ^ w] ^ P[v ^ w, u]
            ^ P[v ^ u, w ^ u])


@_disc("E1_RAW", 3)
def _e1_raw(P, u, v, w):
    return (P[u, v] ^ P[u ^ v, w] ^ P[u ^ v ^ w, u] ^ P[w, u] ^ P[v, w ^ u]
            ^ P[u, u ^ v ^ w])


@_disc("E2_RAW", 3)
def _e2_raw(P, u, v, w):
    return (P[u, v] ^ P[u, w] ^ P[u ^ v, u ^ w] ^ P[v, u] ^ P[v ^ u, w]
            ^ P[u, u ^ v ^ w])


@_disc("E3_RAW", 3)
def _e3_raw(P, u, v, w):
    return (P[v, u] ^ P[w, u] ^ P[v ^ u, w ^ u] ^ P[u, w] ^ P[v, u ^ w]
            ^ P[u ^ v ^ w, u])


ERRATA = {
    "D_PAPER": "probable erratum: expanding y(x.xz) = (yx.x)z gives phi(v+u,u), "
               "not phi(v+u,v); see D_RAW",
}


def _table(phi: FactorSet) -> np.ndarray:
    return phi.table.astype(np.int64)


def discriminant_value(phi: FactorSet, name: str, u: int, v: int, w: int = 0) -> int:
    disc = DISCRIMINANTS[name]
    for i in (u, v, w):
        if not 0 <= i < phi.size:
            raise IndexOutOfRange(f"codeword index {i} outside 0..{phi.size - 1}")
    return int(disc.expr(_table(phi), u, v, w))


def discriminant_holds(phi: FactorSet, name: str) -> IdentityReport:
    """Scan every codeword tuple; the witness is the first (u, v[, w]) with value 1."""
    disc = DISCRIMINANTS[name]
    if disc.arity == 3 and phi.k > MAX_DISCRIMINANT_DIMENSION:
        raise DimensionTooLarge(f"triple scan needs k <= {MAX_DISCRIMINANT_DIMENSION}")
    P = _table(phi)
    if disc.arity == 2:
        witness, scanned = first_violation(phi.size, 2, lambda u, v: disc.expr(P, u, v) != 0)
    else:
        witness, scanned = first_violation(phi.size, 3, lambda u, v, w: disc.expr(P, u, v, w) != 0)
    note = ERRATA.get(name, "") if witness is not None else ""
    return IdentityReport(name, witness is None, witness, scanned, note)


def discriminants_agree(phi: FactorSet, first: str, second: str) -> IdentityReport:
    """Pointwise equality of two discriminants over all codeword triples."""
    P = _table(phi)
    f, g = DISCRIMINANTS[first].expr, DISCRIMINANTS[second].expr
    witness, scanned = first_violation(
        phi.size, 3, lambda u, v, w: f(P, u, v, w) != g(P, u, v, w))
    return IdentityReport(f"{first}=={second}", witness is None, witness, scanned)


# ---------------------------------------------------------------------------
# the six generalized congruences

def _congruence_residuals(phi: FactorSet):
    P = _table(phi)
    W = phi.code.word_array()
    qw = _quarter_weight(phi.code)

    def hd(i, j):
        return _half_dot(W, i, j)

    def dot(i, j):
        return np.bitwise_count(W[i] & W[j]).astype(np.int64)

    def c(i, j, l):
        return np.bitwise_count(W[i] & W[j] & W[l]).astype(np.int64) & 1

    def item1(u, v, w):
        return (P[u, v] ^ P[w, u] ^ P[u ^ v, w] ^ P[v, w ^ u]) ^ hd(u, v ^ w)

    def item2(u, v, w):
        return P[u ^ v, u ^ w] ^ (qw[u] ^ hd(u, v) ^ P[u, w] ^ P[v ^ u, w] ^ P[u, v ^ w])

    def item3(u, v, w):
        return P[u ^ v, u ^ w] ^ (qw[u] ^ hd(u, w) ^ P[v, u] ^ P[v, u ^ w] ^ P[v ^ w, u])

    def item4(u, v, w):
        total = dot(u, v) + dot(u, v ^ w)
        return (P[v, u] ^ P[w, u] ^ P[u ^ v, w] ^ P[v, w ^ u]) ^ ((total >> 1) & 1)

    def item5(u, v, w):
        return (P[w, u] ^ P[v, w] ^ P[u, v ^ w] ^ P[v, w ^ u]) ^ c(u, v, w) ^ hd(u, v ^ w)

    def item6(u, v):
        return (P[u ^ v, u] ^ P[u, u] ^ P[v, u]) | (P[u, u ^ v] ^ P[u, u] ^ P[u, v])

    return {1: (3, item1), 2: (3, item2), 3: (3, item3), 4: (3, item4), 5: (3, item5),
            6: (2, item6)}


def congruence_1_29(phi: FactorSet, item: int) -> IdentityReport:
    """Generalized congruences satisfied by every factor set (items 1..6).

    1. phi(u,v) + phi(w,u) + phi(u+v,w) + phi(v,w+u) = u.(v+w)/2
    2. phi(u+v,u+w) = wt(u)/4 + u.v/2 + phi(u,w) + phi(v+u,w) + phi(u,v+w)
    3. phi(u+v,u+w) = wt(u)/4 + u.w/2 + phi(v,u) + phi(v,u+w) + phi(v+w,u)
    4. phi(v,u) + phi(w,u) + phi(u+v,w) + phi(v,w+u) = (u.v + u.(v+w))/2
    5. phi(w,u) + phi(v,w) + phi(u,v+w) + phi(v,w+u) = c(u,v,w) + u.(v+w)/2
    6. both weak-linearity laws

    All equalities are mod 2.
    """
    if item not in range(1, 7):
        raise ValueError(f"congruence item must be 1..6, got {item}")
    if phi.k > MAX_DISCRIMINANT_DIMENSION:
        raise DimensionTooLarge(f"triple scan needs k <= {MAX_DISCRIMINANT_DIMENSION}")
    _require_doubly_even(phi.code)
    if not (phi.verified or is_factor_set(phi)):
        raise NotAFactorSet("congruences are stated for factor sets only")
    arity, resid = _congruence_residuals(phi)[item]
    witness, scanned = first_violation(phi.size, arity, lambda *a: resid(*a) != 0)
    return IdentityReport(f"CONG{item}", witness is None, witness, scanned)


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class Equivalence:
    label: str
    verdicts: tuple[tuple[str, bool], ...]
    scope: str  # "any phi" | "factor set" | "wl"
    applicable: bool
    erratum: str = ""

    @property
    def agree(self) -> bool:
        return len({v for _, v in self.verdicts}) <= 1

    @property
    def counts(self) -> bool:
        """Whether this row takes part in the overall verdict."""
        return self.applicable and not self.erratum

    def line(self) -> str:
        vals = " ".join(f"{n}={'T' if v else 'F'}" for n, v in self.verdicts)
        if not self.applicable:
            status = "N/A"
        elif self.agree:
            status = "CONSISTENT"
        else:
            status = "ERRATUM" if self.erratum else "INCONSISTENT"
        out = f"[{self.scope}] {self.label}: {vals} -> {status}"
        if self.erratum and self.applicable:
            out += f" # {self.erratum}"
        return out


# identities and discriminants expected to hold in every code loop
PREDICTED = (
    "LC1", "LC2", "LC3", "RC1", "RC2", "RC3", "CLOOP", "EXTRA1", "EXTRA2", "EXTRA3",
    "LA", "RA", "FLEX", "MOUFANG1", "MOUFANG2", "MOUFANG3", "MOUFANG4", "LB", "RB",
    "LCC", "RCC", "MOUFANG", "LC", "RC", "C", "CC", "EXTRA", "LEFT_BURN", "RIGHT_BURN",
    "BURN", "A1", "A2", "A3", "B1", "B2", "B3", "D_RAW", "E1", "E2", "E3", "E1_RAW",
    "E2_RAW", "E3_RAW", "lwl", "rwl", "wl", "NUCLEAR_SQUARE",
)


@dataclass
class Classification:
    phi: FactorSet
    loop: CodeLoop
    factor_set: bool
    weak: WeakLinearity
    checks: dict[str, IdentityReport]
    nonassociative: tuple[int, int, int] | None
    matrix: list[Equivalence] = field(default_factory=list)

    def __getitem__(self, name: str) -> IdentityReport:
        return self.checks[name]

    def holds(self, name: str) -> bool:
        return self.checks[name].holds

    @property
    def consistent(self) -> bool:
        return all(e.agree for e in self.matrix if e.counts)

    @property
    def failed_predictions(self) -> list[str]:
        if not self.factor_set:
            return []
        return [n for n in PREDICTED if not self.checks[n].holds]

    @property
    def errata(self) -> list[Equivalence]:
        return [e for e in self.matrix if e.erratum and e.applicable and not e.agree]

    @property
    def is_group(self) -> bool:
        return self.nonassociative is None

    def header(self) -> str:
        L = self.loop
        kind = "a factor set" if self.factor_set else "NOT a factor set"
        shape = "group" if self.is_group else "nonassociative loop"
        return f"# loop order={L.order} k={L.k}; phi is {kind}; {shape}"

    def check_lines(self) -> list[str]:
        lines = [rep.line() for rep in self.checks.values()]
        if self.nonassociative is not None:
            lines.append("NONASSOCIATIVE witness=(" + ",".join(map(str, self.nonassociative)) + ")")
        else:
            lines.append("ASSOCIATIVE")
        return lines

    def matrix_lines(self) -> list[str]:
        return ["EQUIVALENCES", *(e.line() for e in self.matrix), "END EQUIVALENCES"]

    def text(self) -> str:
        verdict = "CONSISTENT" if self.consistent and not self.failed_predictions \
            else "INCONSISTENT"
        lines = [self.header(), *self.check_lines(), *self.matrix_lines(), f"VERDICT {verdict}"]
        return "\n".join(lines) + "\n"


def _weak_reports(phi: FactorSet, weak: WeakLinearity) -> list[IdentityReport]:
    n2 = phi.size ** 2
    first = lambda f: f[0] if f else None  # noqa: E731
    return [
        IdentityReport("lwl", weak.lwl, first(weak.lwl_failures), n2),
        IdentityReport("rwl", weak.rwl, first(weak.rwl_failures), n2),
        IdentityReport("wl", weak.wl, first(weak.lwl_failures or weak.rwl_failures), n2),
    ]


def _matrix(ch: dict[str, IdentityReport], factor_set: bool, wl: bool) -> list[Equivalence]:
    v = lambda *names: tuple((n, ch[n].holds) for n in names)  # noqa: E731
    both = lambda a, b: (f"{a}&{b}", ch[a].holds and ch[b].holds)  # noqa: E731
    expected = (("expected", True),)
    return [
        # consequences of the product formula alone; hold for every normalized phi
        Equivalence("LC <=> rwl", v("LC1", "LC2", "LC3", "LA", "A1", "A2", "A3", "rwl"),
                    "any phi", True),
        Equivalence("RC <=> lwl", v("RC1", "RC2", "RC3", "RA", "B1", "B2", "B3", "lwl"),
                    "any phi", True),
        Equivalence("C <=> wl", v("C", "ALTERNATIVE", "wl") + (both("A1", "B1"), both("A2", "B2"),
                    both("A3", "B3")), "any phi", True),
        Equivalence("CLOOP <=> D_RAW", v("CLOOP", "D_RAW"), "any phi", True),
        Equivalence("EXTRA1 <=> E1_RAW", v("EXTRA1", "E1_RAW"), "any phi", True),
        Equivalence("EXTRA2 <=> E2_RAW", v("EXTRA2", "E2_RAW"), "any phi", True),
        Equivalence("EXTRA3 <=> E3_RAW", v("EXTRA3", "E3_RAW"), "any phi", True),
        # printed discriminants equal the raw expansions once phi is wl
        Equivalence("E1 == E1_RAW pointwise", v("E1==E1_RAW") + expected, "wl", wl),
        Equivalence("E2 == E2_RAW pointwise", v("E2==E2_RAW") + expected, "wl", wl),
        Equivalence("E3 == E3_RAW pointwise", v("E3==E3_RAW") + expected, "wl", wl),
        # theorems about code loops; need phi to be a factor set
        Equivalence("LC <=> LCC <=> left Burn <=> rwl", v("LC", "LCC", "LEFT_BURN", "rwl"),
                    "factor set", factor_set),
        Equivalence("RC <=> RCC <=> right Burn <=> lwl", v("RC", "RCC", "RIGHT_BURN", "lwl"),
                    "factor set", factor_set),
        Equivalence("C <=> CC <=> Burn <=> extra <=> nuclear square <=> wl",
                    v("C", "CC", "BURN", "EXTRA", "NUCLEAR_SQUARE", "wl"),
                    "factor set", factor_set),
        Equivalence("extra <=> E1 <=> E2 <=> E3", v("EXTRA", "E1", "E2", "E3"),
                    "factor set", factor_set),
        Equivalence("C <=> D_PAPER", v("C", "D_PAPER"), "factor set", factor_set,
                    ERRATA["D_PAPER"]),
    ]


def classify(phi: FactorSet) -> Classification:
    """Build L(phi) and run every identity, discriminant and equivalence check."""
    if phi.k > MAX_CLASSIFY_DIMENSION:
        raise DimensionTooLarge(f"classify needs k <= {MAX_CLASSIFY_DIMENSION}")
    try:
        fs = phi.verified or is_factor_set(phi)
    except (PreconditionNotMet, NotDoublyEven):
        fs = False
    L = build_loop(phi)
    checks: dict[str, IdentityReport] = {}
    for name in IDENTITIES:
        checks[name] = check_identity(L, name)
    for name, members in COMPOSITES.items():
        scanned = sum(checks[m].scanned for m in members)
        bad = next((m for m in members if not checks[m].holds), None)
        checks[name] = IdentityReport(
            name, bad is None, checks[bad].counterexample if bad else None, scanned,
            f"via {bad}" if bad else "")
    for name in DISCRIMINANTS:
        checks[name] = discriminant_holds(phi, name)
    weak = weak_linearity(phi)
    for rep in _weak_reports(phi, weak):
        checks[rep.name] = rep
    for i in (1, 2, 3):
        rep = discriminants_agree(phi, f"E{i}", f"E{i}_RAW")
        checks[rep.name] = rep
    checks["NUCLEAR_SQUARE"] = is_nuclear_square(L, nucleus(L))
    nonassoc = find_nonassociative_triple(L)
    return Classification(phi, L, fs, weak, checks, nonassoc,
                          _matrix(checks, fs, weak.wl))


# the equivalences that hold for every normalized phi, as exercised by fuzzing
IFF_SUITE: dict[str, tuple[str, ...]] = {
    "LC1 <=> A1 <=> rwl": ("LC1", "A1", "rwl"),
    "RC1 <=> B1 <=> lwl": ("RC1", "B1", "lwl"),
    "CLOOP <=> D_RAW": ("CLOOP", "D_RAW"),
    "EXTRA1 <=> E1_RAW": ("EXTRA1", "E1_RAW"),
    "EXTRA2 <=> E2_RAW": ("EXTRA2", "E2_RAW"),
    "EXTRA3 <=> E3_RAW": ("EXTRA3", "E3_RAW"),
    "LA <=> rwl": ("LA", "rwl"),
    "RA <=> lwl": ("RA", "lwl"),
}


def iff_suite(phi: FactorSet) -> list[Equivalence]:
    """Loop-level vs factor-set-level verdicts for arbitrary normalized phi."""
    L = build_loop(phi)
    weak = weak_linearity(phi, limit=1)
    cache: dict[str, bool] = {"rwl": weak.rwl, "lwl": weak.lwl}

    def verdict(name):
        if name not in cache:
            rep = check_identity(L, name) if name in IDENTITIES else discriminant_holds(phi, name)
            cache[name] = rep.holds
        return cache[name]

    return [Equivalence(label, tuple((n, verdict(n)) for n in names), "any phi", True)
            for label, names in IFF_SUITE.items()]
