import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codeloops.gf2_code import (BadCharacter, BitWord, DimensionTooLarge, GenerationFailed,
                                IndexOutOfRange, LengthMismatch, ParseError, TooLong,
                                codeword_at, dot, is_doubly_even, parse_generator_matrix,
                                parse_word, random_doubly_even_code, span, triple_count,
                                weight)

from conftest import HAMMING_ROWS, ref_words

W = parse_word


def test_parse_word():
    z = W("0000")
    assert z.bits == 0 and z.length == 4
    assert weight(W("1111")) == 4
    assert str(W("1011")) == "1011"
    assert W("1000").bits == 1  # character i is bit i


def test_parse_word_errors():
    with pytest.raises(BadCharacter) as err:
        W("11x1")
    assert err.value.position == 2
    with pytest.raises(TooLong):
        W("1" * 65)
    assert W("1" * 64).length == 64


@pytest.mark.parametrize("text, expected", [("00000000", 0), ("11110000", 4), ("11001100", 4)])
def test_weight(text, expected):
    assert weight(W(text)) == expected


def test_dot_and_triple_count():
    u, v, w = W("11110000"), W("00111100"), W("01010101")
    assert dot(u, v) == 2
    assert dot(u, u) == weight(u)
    assert dot(u, W("00000000")) == 0
    assert triple_count(u, v, w) == 1
    assert triple_count(u, u, u) == weight(u)
    assert triple_count(u, v, W("00000000")) == 0
    with pytest.raises(LengthMismatch):
        dot(u, W("1111"))
    with pytest.raises(LengthMismatch):
        triple_count(u, v, W("1111"))


def test_span_examples():
    c = span(["1111"])
    assert c.dimension == 1
    assert [str(codeword_at(c, i)) for i in range(2)] == ["0000", "1111"]
    assert span(["1111", "1111"]).dimension == 1
    h = span(HAMMING_ROWS)
    assert h.dimension == 4 and len(h) == 16
    # oracle: closure under XOR of the rows
    assert sorted(str(codeword_at(h, i)) for i in range(16)) == ref_words(HAMMING_ROWS)


def test_span_rref_is_reduced():
    h = span(HAMMING_ROWS)
    pivots = [r & -r for r in h.rref]
    assert len(set(pivots)) == 4
    for r in h.rref:
        assert sum(1 for p in pivots if r & p) == 1
    assert sorted(codeword_at(span([BitWord(r, 8) for r in h.rref]), i).bits
                  for i in range(16)) == sorted(h.words)


def test_span_errors():
    with pytest.raises(LengthMismatch):
        span(["1111", "11110000"])
    rows = [BitWord(1 << i, 17) for i in range(17)]
    with pytest.raises(DimensionTooLarge):
        span(rows)


def test_codeword_at():
    c = span(["1111"])
    assert codeword_at(c, 0) == W("0000")
    assert codeword_at(c, 1) == W("1111")
    assert str(codeword_at(span(["11110000", "00111100"]), 3)) == "11001100"
    with pytest.raises(IndexOutOfRange):
        codeword_at(c, 2)


def test_is_doubly_even_examples():
    assert is_doubly_even(span(["1111"]))
    bad = is_doubly_even(span(["1100"]))
    assert not bad and bad.witness == (W("1100"),)
    assert "1100 weight=2" in bad.describe()
    assert is_doubly_even(span(HAMMING_ROWS))
    # oracle for the Hamming verdict: string counts over the XOR closure
    words = ref_words(HAMMING_ROWS)
    assert all(w.count("1") % 4 == 0 for w in words)
    assert all(sum(a == b == "1" for a, b in zip(x, y)) % 2 == 0 for x in words for y in words)


def test_is_doubly_even_odd_pair():
    # each generator has weight 4 but they meet in one coordinate
    c = span(["11110000", "00011110"])
    ex = is_doubly_even(c)
    assert not ex
    assert not is_doubly_even(c, method="basis")


@pytest.mark.parametrize("seed", range(40))
def test_basis_shortcut_agrees_with_exhaustive(seed):
    import random
    rng = random.Random(seed)
    n = rng.randint(4, 12)
    rows = [BitWord(rng.getrandbits(n), n) for _ in range(rng.randint(1, 4))]
    c = span(rows)
    assert bool(is_doubly_even(c)) == bool(is_doubly_even(c, method="basis"))


def test_random_doubly_even_code_examples():
    c = random_doubly_even_code(4, 1, 123)
    assert [str(w) for w in map(c.word, range(2))] == ["0000", "1111"]
    for seed in range(10):
        c = random_doubly_even_code(8, 2, seed)
        assert c.dimension == 2 and is_doubly_even(c)
    with pytest.raises(GenerationFailed):
        random_doubly_even_code(4, 2, 0)


def test_random_doubly_even_code_deterministic():
    assert random_doubly_even_code(16, 4, 99) == random_doubly_even_code(16, 4, 99)


def test_parse_generator_matrix():
    rows = parse_generator_matrix("# comment\n\n1111\n  0000\n")
    assert [str(r) for r in rows] == ["1111", "0000"]
    with pytest.raises(ParseError) as err:
        parse_generator_matrix("1111\n11a1\n")
    assert (err.value.line, err.value.column) == (2, 3)
    with pytest.raises(ParseError):
        parse_generator_matrix("1111\n11\n")
    with pytest.raises(ParseError):
        parse_generator_matrix("# nothing\n")


# ---------------------------------------------------------------------------
# properties

words8 = st.integers(0, 255).map(lambda b: BitWord(b, 8))


@given(words8, words8)
def test_inclusion_exclusion(u, v):
    assert weight(u + v) == weight(u) + weight(v) - 2 * dot(u, v)


@given(words8, words8, words8)
def test_counts_symmetric(u, v, w):
    assert dot(u, v) == dot(v, u)
    t = triple_count(u, v, w)
    assert t == triple_count(v, u, w) == triple_count(w, v, u) == triple_count(u, w, v)


@given(st.lists(st.integers(0, 2 ** 12 - 1), min_size=1, max_size=5))
def test_codeword_at_is_homomorphism(rows):
    c = span([BitWord(r, 12) for r in rows])
    n = len(c)
    for i in range(n):
        for j in range(n):
            assert codeword_at(c, i) + codeword_at(c, j) == codeword_at(c, i ^ j)
    assert codeword_at(c, 0).bits == 0
    assert len(set(c.words)) == n


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 8), st.integers(0, 2 ** 32))
def test_random_codes_are_doubly_even(k, extra, seed):
    c = random_doubly_even_code(4 * k + extra, k, seed)
    assert c.dimension == k
    assert is_doubly_even(c, method="exhaustive")
