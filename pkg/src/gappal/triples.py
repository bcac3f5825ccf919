"""Arithmetic-progression representation of palindromic suffix starts.

For a prefix ``S[1..j]`` let ``P_j`` be the ascending start positions of its
generalized palindromic suffixes (including the length-1 suffix when
``S[j]`` is a fixed point).  Consecutive differences in ``P_j`` never
increase and take O(log j) distinct values, so ``P_j`` splits into maximal
runs of equal difference.  A run is stored as a :class:`Triple`
``(i, delta, k)`` meaning ``{i, i + delta, ..., i + (k-1) delta}``, where
``delta`` is the distance from each element to its predecessor in ``P_j``.
The first element of ``P_j`` has no predecessor and forms the head triple
``(i, INFINITE, 1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .alphabet import Involution, Sequence

INFINITE = math.inf


class Triple(NamedTuple):
    i: int
    delta: float
    k: int

    @property
    def last(self) -> int:
        return self.i if self.k == 1 else self.i + (self.k - 1) * self.delta

    def positions(self) -> range:
        if self.delta == INFINITE:
            return range(self.i, self.i + 1)
        return range(self.i, self.i + self.k * self.delta, self.delta)


@dataclass(frozen=True)
class TripleSet:
    j: int
    triples: tuple = ()

    def positions(self) -> list[int]:
        return [p for t in self.triples for p in t.positions()]

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __len__(self) -> int:
        return len(self.triples)


def size_bound(j: int) -> int:
    """Upper bound on ``len(G_j)`` checked by the test-suite."""
    return 2 * math.ceil(math.log2(j + 1)) + 2


def _append(runs: list, start: int, diff, count: int) -> None:
    if runs and runs[-1][1] == diff and diff != INFINITE:
        i, d, k = runs[-1]
        runs[-1] = (i, d, k + count)
    else:
        runs.append((start, diff, count))


def _advance(triples, j: int, letters, f: Involution, check: bool = False) -> tuple:
    """``G_j`` from ``G_{j-1}``; ``letters`` is 0-indexed, ``j`` 1-based."""
    want = f(letters[j - 1])  # S[p-1] must equal f(S[j])
    groups = []
    for i, delta, k in triples:
        # every start in one run sees the same letter before it
        if i >= 2 and letters[i - 2] == want:
            if check and k > 1:
                assert all(letters[p - 2] == want for p in range(i, i + k * delta, delta))
            groups.append((i - 1, delta, k))
    if j >= 2 and letters[j - 2] == want:
        groups.append((j - 1, INFINITE, 1))
    if letters[j - 1] == want:
        groups.append((j, INFINITE, 1))

    runs: list = []
    prev = None
    for start, delta, k in groups:
        _append(runs, start, INFINITE if prev is None else start - prev, 1)
        if k > 1:
            _append(runs, start + delta, delta, k - 1)
        prev = start + (k - 1) * delta if k > 1 else start
    return tuple(Triple(*r) for r in runs)


def advance(state: TripleSet | None, seq: Sequence, f: Involution) -> TripleSet:
    """Compute ``G_j`` from ``G_{j-1}`` (pass ``None`` for ``j = 1``).

    Each triple either vanishes or shifts to ``(i-1, delta, k)``, decided by
    one letter comparison; runs whose spacing changed are then re-split and
    equal-difference neighbours merged.
    """
    j = 1 if state is None else state.j + 1
    if j > seq.n:
        raise IndexError(f"cannot advance past j = {seq.n}")
    prev = () if state is None else state.triples
    return TripleSet(j, _advance(prev, j, seq.letters, f))


def iter_triple_sets(seq: Sequence, f: Involution) -> Iterator[TripleSet]:
    """Yield ``G_1, G_2, ..., G_n``."""
    triples: tuple = ()
    letters = seq.letters
    for j in range(1, seq.n + 1):
        triples = _advance(triples, j, letters, f)
        yield TripleSet(j, triples)


def triple_set_at(seq: Sequence, f: Involution, j: int) -> TripleSet:
    for state in iter_triple_sets(seq, f):
        if state.j == j:
            return state
    raise IndexError(j)


def trim_triple(t: Triple, j: int, m: int) -> Triple | None:
    """Restrict ``t`` to starts of palindromic suffixes of length at least ``m``."""
    limit = j - m + 1
    if t.i > limit:
        return None
    if t.delta == INFINITE:
        return t
    k = min(t.k, (limit - t.i) // t.delta + 1)
    return t if k == t.k else Triple(t.i, t.delta, k)


def trim(state: TripleSet, m: int, check: bool = False) -> list[Triple]:
    """Triples of ``state`` restricted to palindromes of length ``>= m``.

    Whole triples disappear from the end of the list and at most one is cut
    short; with ``check=True`` the latter is asserted.
    """
    if m < 1:
        raise ValueError("minimum length m must be at least 1")
    out = []
    partial = 0
    for t in state.triples:
        kept = trim_triple(t, state.j, m)
        if kept is None:
            continue
        partial += kept.k != t.k
        out.append(kept)
    if check and partial > 1:
        raise AssertionError(f"{partial} triples partially trimmed at j = {state.j}")
    return out
