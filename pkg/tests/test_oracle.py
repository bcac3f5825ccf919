import itertools
import random

import pytest
from hypothesis import given, strategies as st

from gappal.oracle import (
    INFINITE,
    OracleConfig,
    admissible_pieces,
    brute_maximal,
    brute_min_gaps,
    brute_P_j,
    exhaustive_min_gaps,
    full_edit_dist_to_gpal,
    min_gaps_over_pieces,
    naive_edit_dist_to_gpal,
    naive_hamming_dist_to_gpal,
    naive_is_gpal,
)

from conftest import AACC, INVOLUTIONS


def test_is_gpal_examples(identity, dna):
    assert naive_is_gpal("AGTACTTCATGA", identity)
    assert naive_is_gpal("TAGTCGACTA", dna)
    assert not naive_is_gpal("AB", identity)
    assert naive_is_gpal("", dna)


def test_hamming_examples(identity, dna, mixed):
    assert naive_hamming_dist_to_gpal("GTATC", identity) == 1
    assert naive_hamming_dist_to_gpal("TAGTCGACTA", dna) == 0
    assert naive_hamming_dist_to_gpal("ACG", dna) == INFINITE
    assert naive_hamming_dist_to_gpal("ACT", mixed) == 0
    assert naive_hamming_dist_to_gpal("ACA", mixed) == 1
    # mismatched pair plus a middle letter that is not a fixed point
    assert naive_hamming_dist_to_gpal("ATA", mixed) == 2


def test_edit_examples(identity, dna):
    assert naive_edit_dist_to_gpal("GTATCG", identity) == 1
    assert naive_edit_dist_to_gpal("TAGTCGACTA", dna) == 0
    assert naive_edit_dist_to_gpal("A", dna) == 1
    assert naive_edit_dist_to_gpal("", dna) == 0


def test_brute_P_j_periodic(identity):
    assert brute_P_j(AACC, identity, 18) == [1, 5, 9, 13, 17, 18]
    assert brute_P_j("AB", identity, 1) == [1]
    assert brute_P_j("AB", INVOLUTIONS["dna"], 1) == []


def test_brute_maximal_gtatcg(identity):
    def strings(table, d):
        return {t / 2: "GTATCG"[a - 1:b] for (dd, t), (a, b) in table.items() if dd == d}

    ham = brute_maximal("GTATCG", identity, 1, "hamming")
    edit = brute_maximal("GTATCG", identity, 1, "edit")
    row0 = ["G", "", "T", "", "TAT", "", "T", "", "C", "", "G"]
    centers = [1 + k / 2 for k in range(11)]
    assert strings(ham, 0) == dict(zip(centers, row0))
    assert strings(edit, 0) == dict(zip(centers, row0))
    assert list(strings(ham, 1).values()) == ["G", "GT", "GTA", "TA", "GTATC", "AT", "ATC", "TC", "TCG", "CG", "G"]
    assert list(strings(edit, 1).values()) == [
        "G", "GT", "GTA", "GTAT", "GTATC", "GTATCG", "ATC", "TC", "TCG", "CG", "G",
    ]


def test_brute_min_gaps_small(identity):
    assert brute_min_gaps("GTATCG", identity, g=2, m=3) == 3
    assert brute_min_gaps("GTATCG", identity, g=1, m=3) == 6
    assert brute_min_gaps("abaca", identity, g=1, m=2) == 2
    assert brute_min_gaps("abba", identity, g=0, m=4) == 0
    assert brute_min_gaps("abaca", identity, g=0, m=1, pieces="maximal") == INFINITE


@pytest.mark.parametrize("name", ["identity", "dna", "mixed"])
def test_min_gaps_dp_matches_tiling_enumeration(name):
    f = INVOLUTIONS[name]
    rng = random.Random(7)
    for _ in range(60):
        x = "".join(rng.choice("ACGT") for _ in range(rng.randint(1, 8)))
        for delta, metric in ((0, "hamming"), (1, "edit"), (1, "hamming")):
            for pieces in ("all", "maximal"):
                for m in (1, 2):
                    cand = admissible_pieces(x, f, m, delta, metric, pieces)
                    for g in (0, 1, 2):
                        assert min_gaps_over_pieces(len(x), cand, g) == exhaustive_min_gaps(len(x), cand, g)


@pytest.mark.parametrize("name", ["identity", "dna"])
def test_restricted_edit_equals_full_edit_binary(name):
    # insertions never help: deletions and substitutions reach the optimum
    f = INVOLUTIONS[name]
    for n in range(1, 11):
        for letters in itertools.product("AT", repeat=n):
            assert full_edit_dist_to_gpal(letters, f, "AT") == naive_edit_dist_to_gpal(letters, f)


@pytest.mark.parametrize("name", ["identity", "dna", "mixed"])
def test_restricted_edit_equals_full_edit_quaternary(name):
    f = INVOLUTIONS[name]
    for n in range(1, 6):
        for letters in itertools.product("ACGT", repeat=n):
            assert full_edit_dist_to_gpal(letters, f, "ACGT") == naive_edit_dist_to_gpal(letters, f)
    for x in OracleConfig(max_n=10, alphabet="ACGT", seed=11).sample(80):
        assert full_edit_dist_to_gpal(x, f, "ACGT") == naive_edit_dist_to_gpal(x, f)


@given(st.text(alphabet="ACGT", max_size=14), st.sampled_from(sorted(INVOLUTIONS)))
def test_oracle_self_consistency(x, name):
    f = INVOLUTIONS[name]
    ham = naive_hamming_dist_to_gpal(x, f)
    edit = naive_edit_dist_to_gpal(x, f)
    if ham != INFINITE:
        assert edit <= ham
    assert naive_is_gpal(x, f) == (ham == 0) == (edit == 0)


def test_config_bounds():
    with pytest.raises(ValueError):
        OracleConfig(max_n=40)
    cfg = OracleConfig(max_n=3, alphabet="ab")
    assert len(list(cfg.exhaustive())) == 2 + 4 + 8
    assert cfg.sample(5) == OracleConfig(max_n=3, alphabet="ab").sample(5)
