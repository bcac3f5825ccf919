import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gappal.alphabet import make_involution, rank_reduce
from gappal.lce import LceEngine, SparseTable, lcp_array, suffix_array

from conftest import HAIRPIN, INVOLUTIONS


def naive_lce(text, i, j):
    k = 0
    while i + k <= len(text) and j + k <= len(text) and text[i + k - 1] == text[j + k - 1]:
        k += 1
    return k


def naive_lgpal(x, f, i, j):
    k = 0
    while i - k >= 1 and j + k <= len(x) and f(x[i - k - 1]) == x[j + k - 1]:
        k += 1
    return k


def test_text_layout_identity(identity):
    eng = LceEngine(rank_reduce("AB"), identity)
    assert len(eng) == 5
    a, b, sep = eng.text[0], eng.text[1], eng.text[2]
    assert list(eng.text) == [a, b, sep, b, a]
    assert sep == LceEngine.SENTINEL and sep not in (a, b)


def test_lce_examples(identity):
    eng = LceEngine(rank_reduce("AB"), identity)
    assert eng.lce(1, 5) == 1
    assert eng.lce(1, 3) == 0
    for i in range(1, 6):
        assert eng.lce(i, i) == 5 - i + 1
    with pytest.raises(IndexError):
        eng.lce(0, 2)
    with pytest.raises(IndexError):
        eng.lce(1, 6)


def test_single_letter(identity):
    eng = LceEngine(rank_reduce("A"), identity)
    assert len(eng) == 3
    assert eng.lce(1, 3) == 1


def test_hairpin_queries(dna):
    eng = LceEngine(rank_reduce(HAIRPIN), dna)
    assert len(eng) == 27
    assert eng.lgpal(7, 8) == 3
    assert eng.lgpal(3, 12) == 2
    assert eng.lgpal(0, 5) == 0
    assert eng.lgpal(5, 14) == 0
    with pytest.raises(IndexError):
        eng.lgpal(-1, 3)
    with pytest.raises(IndexError):
        eng.lgpal(3, 15)


def test_empty_sequence_rejected(identity):
    with pytest.raises(ValueError):
        LceEngine(rank_reduce(""), identity)


def test_non_total_involution_rejected(dna):
    with pytest.raises(ValueError):
        LceEngine(rank_reduce("ACGU"), dna)


def test_suffix_array_matches_sorting():
    rng = np.random.default_rng(3)
    for size in (1, 2, 7, 50, 300):
        codes = rng.integers(0, 3, size)
        expected = sorted(range(size), key=lambda p: codes[p:].tolist())
        assert suffix_array(codes).tolist() == expected


def test_lcp_array_periodic():
    codes = np.array([1] * 6)
    sa = suffix_array(codes)
    assert sa.tolist() == [5, 4, 3, 2, 1, 0]
    assert lcp_array(codes, sa).tolist() == [0, 1, 2, 3, 4, 5]


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=60), st.data())
def test_sparse_table(values, data):
    table = SparseTable(np.array(values))
    lo = data.draw(st.integers(0, len(values) - 1))
    hi = data.draw(st.integers(lo, len(values) - 1))
    assert table.query(lo, hi) == min(values[lo:hi + 1])
    assert table.query(np.array([lo]), np.array([hi])).tolist() == [min(values[lo:hi + 1])]


@pytest.mark.parametrize("name", ["identity", "dna", "mixed"])
def test_lgpal_exhaustive_small(name):
    f = INVOLUTIONS[name]
    for n in range(1, 9):
        for letters in itertools.product("AT" if n > 6 else "ACT", repeat=n):
            x = "".join(letters)
            eng = LceEngine(rank_reduce(x), f)
            for i in range(0, n + 1):
                for j in range(1, n + 2):
                    k = eng.lgpal(i, j)
                    assert k == naive_lgpal(x, f, i, j)
                    assert k <= min(i, n - j + 1)


@given(st.text(alphabet="ACGT", min_size=1, max_size=40))
def test_lgpal_vectorised_matches_scalar(x):
    f = INVOLUTIONS["dna"]
    eng = LceEngine(rank_reduce(x), f)
    n = len(x)
    pairs = [(i, j) for i in range(n + 1) for j in range(1, n + 2)]
    i, j = map(np.array, zip(*pairs))
    assert eng.lgpal_many(i, j).tolist() == [naive_lgpal(x, f, a, b) for a, b in pairs]


@given(st.text(alphabet="ACGT", min_size=1, max_size=25))
def test_lgpal_is_tight(x):
    # f(S[i-k+1..i]^R) = S[j..j+k-1] holds at k and fails at k+1 unless a border was hit
    f = INVOLUTIONS["dna"]
    eng = LceEngine(rank_reduce(x), f)
    n = len(x)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = eng.lgpal(i, j)
            left = x[i - k:i]
            assert "".join(f(c) for c in reversed(left)) == x[j - 1:j - 1 + k]
            if i - k >= 1 and j + k <= n:
                assert f(x[i - k - 1]) != x[j + k - 1]


@given(st.text(alphabet="ab", min_size=1, max_size=30), st.data())
def test_lce_matches_naive(x, data):
    eng = LceEngine(rank_reduce(x), make_involution("identity"))
    text = eng.text.tolist()
    i = data.draw(st.integers(1, len(text)))
    j = data.draw(st.integers(1, len(text)))
    assert eng.lce(i, j) == naive_lce(text, i, j)
