import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codeloops.factor_set import (factor_set_space, make_factor_table, random_normalized_phi,
                                  weak_linearity)
from codeloops.gf2_code import DimensionTooLarge, random_doubly_even_code, span
from codeloops.identity_catalog import (COMPOSITES, DISCRIMINANTS, IDENTITIES, IFF_SUITE,
                                        IndexOutOfRange, NotAFactorSet, check_identity, classify,
                                        congruence_1_29, discriminant_holds, discriminant_value,
                                        discriminants_agree, iff_suite)
from codeloops.loop_core import build_loop

from conftest import ref_elements, ref_mul


@pytest.fixture(scope="module")
def non_wl(k2_code):
    t = np.zeros((4, 4), dtype=np.uint8)
    t[1, 2] = 1
    return make_factor_table(k2_code, t)


@pytest.fixture(scope="module")
def z4(rep_phi):
    return build_loop(rep_phi)


@pytest.fixture(scope="module")
def ham_loop(hamming_phi):
    return build_loop(hamming_phi)


def test_registry_contents():
    assert set(IDENTITIES) >= {"LC1", "RC3", "CLOOP", "EXTRA3", "MOUFANG4", "LB", "RB",
                               "LCC", "RCC", "LA", "RA", "FLEX"}
    assert set(COMPOSITES) >= {"MOUFANG", "C", "CC", "EXTRA", "BURN"}
    assert set(DISCRIMINANTS) >= {"A1", "B3", "D_PAPER", "D_RAW", "E1", "E3_RAW"}


def test_group_satisfies_everything(z4):
    for name in list(IDENTITIES) + list(COMPOSITES):
        assert check_identity(z4, name).holds, name


def test_hamming_moufang(ham_loop):
    rep = check_identity(ham_loop, "MOUFANG")
    assert rep.holds and rep.scanned == 4 * 32 ** 3


def test_non_wl_lc1_fails(non_wl):
    L = build_loop(non_wl)
    rep = check_identity(L, "LC1")
    assert not rep.holds
    x, y, z = rep.counterexample
    m = L.product
    assert m(m(x, x), m(y, z)) != m(m(x, m(x, y)), z)
    assert not check_identity(L, "LCC").holds


def test_unknown_identity(z4):
    with pytest.raises(ValueError):
        check_identity(z4, "NOPE")


def test_discriminant_examples(rep_phi, non_wl, hamming_phi):
    for u in range(4):
        assert discriminant_value(non_wl, "A1", u, 0) == 0
    assert discriminant_value(non_wl, "A1", 1, 2) == 1
    assert discriminant_holds(rep_phi, "A1").holds
    rep = discriminant_holds(non_wl, "A1")
    assert not rep.holds and rep.counterexample == (1, 2)
    with pytest.raises(IndexOutOfRange):
        discriminant_value(rep_phi, "A1", 2, 0)
    assert discriminant_holds(hamming_phi, "D_RAW").holds


def test_d_paper_reduces_to_square(hamming_phi):
    words = hamming_phi.code.words
    for u in range(16):
        for w in range(16):
            got = discriminant_value(hamming_phi, "D_PAPER", u, 0, w)
            assert got == hamming_phi(u, u) == bin(words[u]).count("1") // 4 % 2
    rep = discriminant_holds(hamming_phi, "D_PAPER")
    assert not rep.holds and "erratum" in rep.note


def test_congruences(rep_phi, k2_phi, hamming_phi):
    for phi in (rep_phi, k2_phi, hamming_phi):
        for i in range(1, 7):
            rep = congruence_1_29(phi, i)
            assert rep.holds and rep.name == f"CONG{i}"
    assert congruence_1_29(hamming_phi, 1).scanned == 4096


def test_congruence_preconditions(non_wl, k2_phi):
    with pytest.raises(NotAFactorSet):
        congruence_1_29(non_wl, 1)
    with pytest.raises(ValueError):
        congruence_1_29(k2_phi, 7)


def test_classify_repetition(rep_phi):
    cl = classify(rep_phi)
    assert cl.is_group and cl.consistent and not cl.failed_predictions
    assert all(cl[n].holds for n in cl.checks if n != "D_PAPER")
    assert "group" in cl.header()


def test_classify_hamming(hamming_phi):
    cl = classify(hamming_phi)
    for name in ("MOUFANG", "C", "CC", "EXTRA", "BURN", "NUCLEAR_SQUARE"):
        assert cl[name].holds
    assert not cl.is_group
    assert cl.consistent and not cl.failed_predictions
    assert [e.label for e in cl.errata] == ["C <=> D_PAPER"]


def test_classify_non_wl(k2_code):
    for seed in range(50):
        phi = random_normalized_phi(k2_code, seed)
        if not weak_linearity(phi).rwl:
            break
    cl = classify(phi)
    assert not cl["rwl"].holds and not cl["LC1"].holds and not cl["LCC"].holds
    assert not cl.factor_set and cl.consistent
    assert "VERDICT CONSISTENT" in cl.text()


def test_classify_too_large():
    code = random_doubly_even_code(24, 5, 0)
    with pytest.raises(DimensionTooLarge):
        classify(random_normalized_phi(code, 0))


# ---------------------------------------------------------------------------
# independent oracle: identities rewritten over (a, u) pairs with search-based division

def _oracle(phi):
    P = phi.table.tolist()
    k = phi.k
    els = ref_elements(k)
    m = lambda x, y: ref_mul(P, k, x, y)  # noqa: E731

    def rdiv(y, x):
        return next(z for z in els if m(z, x) == y)

    def ldiv(x, y):
        return next(z for z in els if m(x, z) == y)

    forms = {
        "MOUFANG1": lambda x, y, z: m(z, m(x, m(z, y))) == m(m(m(z, x), z), y),
        "LB": lambda x, y, z: m(x, m(y, m(x, z))) == m(m(x, m(y, x)), z),
        "RB": lambda x, y, z: m(m(m(z, x), y), x) == m(z, m(m(x, y), x)),
        "LCC": lambda x, y, z: m(z, m(y, x)) == m(rdiv(m(z, y), z), m(z, x)),
        "RCC": lambda x, y, z: m(m(x, y), z) == m(m(x, z), ldiv(z, m(y, z))),
        "CLOOP": lambda x, y, z: m(y, m(x, m(x, z))) == m(m(m(y, x), x), z),
        "EXTRA1": lambda x, y, z: m(m(m(x, y), z), x) == m(x, m(y, m(z, x))),
    }
    return {name: all(f(x, y, z) for x, y, z in itertools.product(els, repeat=3))
            for name, f in forms.items()}


@pytest.mark.parametrize("seed", range(12))
def test_identities_against_oracle(k2_code, seed):
    phi = random_normalized_phi(k2_code, seed)
    L = build_loop(phi)
    for name, expected in _oracle(phi).items():
        assert check_identity(L, name).holds == expected, name


def test_identities_against_oracle_factor_sets(k2_code):
    for phi in factor_set_space(k2_code):
        L = build_loop(phi)
        for name, expected in _oracle(phi).items():
            assert expected and check_identity(L, name).holds == expected, name


# ---------------------------------------------------------------------------
# properties

def _unit_code(k):
    return span(["".join("1" if j == i else "0" for j in range(max(k, 1))) for i in range(k)]
                or ["0"])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2 ** 32))
def test_iff_suite_on_random_phi(k, seed):
    rows = iff_suite(random_normalized_phi(_unit_code(k), seed))
    assert len(rows) == len(IFF_SUITE)
    assert all(e.agree for e in rows), [e.line() for e in rows if not e.agree]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2 ** 32))
def test_any_phi_matrix_rows_agree(k, seed):
    cl = classify(random_normalized_phi(_unit_code(k), seed))
    for e in cl.matrix:
        if e.scope == "any phi":
            assert e.agree, e.line()


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(0, 4), st.integers(0, 2 ** 32), st.integers(0, 2 ** 32))
def test_printed_matches_raw_under_wl(k, extra, cseed, pseed):
    code = random_doubly_even_code(4 * k + extra, k, cseed)
    space = factor_set_space(code)
    rng = np.random.default_rng(pseed)
    phi = space.member(rng.integers(0, 2, space.dimension))
    for i in (1, 2, 3):
        assert discriminants_agree(phi, f"E{i}", f"E{i}_RAW").holds
