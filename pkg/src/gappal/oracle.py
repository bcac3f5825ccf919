"""Brute-force references for every algorithm in the package.

Nothing here uses the LCE index, the triple sets or the decomposition
dynamic programs; these functions are quadratic or worse and are meant for
short strings (``OracleConfig.max_n``).
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence as Seq

from .alphabet import Involution, Sequence

INFINITE = math.inf


@dataclass(frozen=True)
class OracleConfig:
    max_n: int = 12
    alphabet: str = "AT"
    metric: str = "edit"
    seed: int = 0

    def __post_init__(self):
        if self.max_n > 16:
            raise ValueError("brute-force oracles are limited to max_n <= 16")

    def exhaustive(self, n: int | None = None) -> Iterable[str]:
        for length in range(1, (n or self.max_n) + 1):
            for letters in itertools.product(self.alphabet, repeat=length):
                yield "".join(letters)

    def sample(self, count: int, max_len: int | None = None) -> list[str]:
        rng = random.Random(self.seed)
        top = max_len or self.max_n
        return ["".join(rng.choice(self.alphabet) for _ in range(rng.randint(1, top))) for _ in range(count)]


def _letters(x) -> Seq:
    return x.letters if isinstance(x, Sequence) else x


def naive_is_gpal(x, f: Involution) -> bool:
    x = _letters(x)
    lo, hi = 0, len(x) - 1
    while lo <= hi:
        if f(x[lo]) != x[hi]:
            return False
        lo += 1
        hi -= 1
    return True


def naive_hamming_dist_to_gpal(x, f: Involution) -> float:
    x = _letters(x)
    size = len(x)
    dist = sum(1 for p in range(size // 2) if f(x[p]) != x[size - 1 - p])
    if size % 2:
        mid = x[size // 2]
        if f(mid) != mid:
            if not f.has_fixed_point:
                return INFINITE
            dist += 1
    return dist


def edit_distance_table(x, f: Involution) -> list[list[int]]:
    """``D[a][b]``: restricted edit distance of ``x[a..b]`` (0-based, inclusive) to a generalized palindrome.

    Only deletions and substitutions are used.  ``D[a][a-1]`` (empty) is 0.
    """
    x = _letters(x)
    size = len(x)
    D = [[0] * (size + 1) for _ in range(size + 1)]
    for a in range(size - 1, -1, -1):
        row, below = D[a], D[a + 1]
        row[a] = 0 if f(x[a]) == x[a] else 1
        for b in range(a + 1, size):
            if f(x[a]) == x[b]:
                row[b] = below[b - 1] if b - 1 >= a + 1 else 0
            else:
                inner = below[b - 1] if b - 1 >= a + 1 else 0
                row[b] = 1 + min(below[b], row[b - 1], inner)
    return D


def naive_edit_dist_to_gpal(x, f: Involution) -> int:
    x = _letters(x)
    if not x:
        return 0
    return edit_distance_table(x, f)[0][len(x) - 1]


def _levenshtein(u, v, cap: int) -> int:
    """Insert/delete/substitute distance, giving up (returning ``cap``) once every cell reaches it."""
    prev = list(range(len(v) + 1))
    for a, cu in enumerate(u, 1):
        cur = [a] + [0] * len(v)
        for b, cv in enumerate(v, 1):
            cur[b] = min(prev[b] + 1, cur[b - 1] + 1, prev[b - 1] + (cu != cv))
        if min(cur) >= cap:
            return cap
        prev = cur
    return min(prev[-1], cap)


def gpal_words(length: int, f: Involution, alphabet: Seq) -> Iterable[tuple]:
    """Every generalized palindrome of the given length over ``alphabet``."""
    half = length // 2
    middles = [()] if length % 2 == 0 else [(a,) for a in alphabet if f(a) == a]
    for left in itertools.product(alphabet, repeat=half):
        right = tuple(f(a) for a in reversed(left))
        for mid in middles:
            yield left + mid + right


def full_edit_dist_to_gpal(x, f: Involution, alphabet: Iterable) -> int:
    """Unrestricted edit distance (insertions too) to the nearest generalized palindrome.

    Enumerates candidate palindromes over ``alphabet`` whose length is within
    the restricted-operation distance of ``|x|``; exponential, tiny inputs only.
    """
    x = tuple(_letters(x))
    letters = tuple(alphabet)
    best = naive_edit_dist_to_gpal(x, f)
    for length in range(max(0, len(x) - best + 1), len(x) + best):
        for word in gpal_words(length, f, letters):
            best = min(best, _levenshtein(x, word, best))
            if best == 0:
                return 0
    return best


def brute_P_j(seq, f: Involution, j: int) -> list[int]:
    """Start positions (1-based, ascending) of all generalized palindromic suffixes of ``S[1..j]``."""
    x = _letters(seq)
    if not 1 <= j <= len(x):
        raise IndexError(j)
    return [p for p in range(1, j + 1) if naive_is_gpal(x[p - 1:j], f)]


def distance_table(x, f: Involution, metric: str):
    """``dist(a, b)`` for 1-based inclusive factors, by metric."""
    x = _letters(x)
    if metric == "edit":
        D = edit_distance_table(x, f)
        return lambda a, b: 0 if b < a else D[a - 1][b - 1]
    if metric in ("hamming", "exact"):
        return lambda a, b: naive_hamming_dist_to_gpal(x[a - 1:b], f)
    raise ValueError(metric)


def brute_maximal(seq, f: Involution, delta: int, metric: str) -> dict:
    """``{(d, twice): (start, end)}`` for the longest same-center factor within ``d`` errors."""
    x = _letters(seq)
    n = len(x)
    dist = distance_table(x, f, "hamming" if metric == "exact" else metric)
    out = {}
    for twice in range(2, 2 * n + 1):
        factors = []
        if twice % 2 == 0:
            c = twice // 2
            r = 0
            while c - r >= 1 and c + r <= n:
                factors.append((c - r, c + r))
                r += 1
        else:
            a, b = (twice + 1) // 2, (twice - 1) // 2
            while a >= 1 and b <= n:
                factors.append((a, b))
                a, b = a - 1, b + 1
        for d in range(delta + 1):
            best = None
            for a, b in factors:
                if dist(a, b) <= d:
                    best = (a, b)
            if best is not None:
                out[d, twice] = best
    return out


def admissible_pieces(seq, f: Involution, m: int, delta: int, metric: str, pieces: str) -> list[tuple]:
    """Factors ``(start, end)`` of length >= m allowed as palindromic pieces.

    ``pieces="all"``: every factor within ``delta`` errors; ``"maximal"``: only
    the maximal delta-palindromes, one per center.
    """
    x = _letters(seq)
    n = len(x)
    if pieces == "maximal":
        table = brute_maximal(x, f, delta, metric)
        found = {table[key] for key in table if key[0] == delta}
    elif pieces == "all":
        dist = distance_table(x, f, "hamming" if metric == "exact" else metric)
        found = {(a, b) for a in range(1, n + 1) for b in range(a, n + 1) if dist(a, b) <= delta}
    else:
        raise ValueError(pieces)
    return sorted((a, b) for a, b in found if b - a + 1 >= m)


def min_gaps_over_pieces(n: int, pieces: Iterable[tuple], g: int) -> float:
    """Forward DP over (consumed prefix, gaps opened, inside-gap flag) with an explicit piece scan."""
    starting = {}
    for a, b in pieces:
        starting.setdefault(a, []).append(b)
    best = {(0, 0, False): 0}
    for pos in range(n):
        for used in range(g + 1):
            for in_gap in (False, True):
                cost = best.get((pos, used, in_gap))
                if cost is None:
                    continue
                for b in starting.get(pos + 1, ()):
                    key = (b, used, False)
                    if cost < best.get(key, INFINITE):
                        best[key] = cost
                if in_gap:
                    key = (pos + 1, used, True)
                elif used < g:
                    key = (pos + 1, used + 1, True)
                else:
                    continue
                if cost + 1 < best.get(key, INFINITE):
                    best[key] = cost + 1
    return min((best.get((n, u, flag), INFINITE) for u in range(g + 1) for flag in (False, True)), default=INFINITE)


def brute_min_gaps(seq, f: Involution, g: int, m: int, delta: int = 0, metric: str = "hamming",
                   pieces: str = "all") -> float:
    """Minimum total gap length, or ``INFINITE`` when no decomposition exists."""
    x = _letters(seq)
    return min_gaps_over_pieces(len(x), admissible_pieces(x, f, m, delta, metric, pieces), g)


def exhaustive_min_gaps(n: int, pieces: Iterable[tuple], g: int) -> float:
    """Enumerate every tiling of ``1..n`` by pieces and gaps; exponential."""
    allowed = set(pieces)
    best = INFINITE
    for cuts in itertools.product((False, True), repeat=n - 1):
        bounds = [0] + [p + 1 for p, c in enumerate(cuts) if c] + [n]
        segs = [(bounds[t] + 1, bounds[t + 1]) for t in range(len(bounds) - 1)]
        for labels in itertools.product((False, True), repeat=len(segs)):
            if any(lab and seg not in allowed for lab, seg in zip(labels, segs)):
                continue
            gaps = [seg for lab, seg in zip(labels, segs) if not lab]
            # adjacent gap segments count as one gap
            count = sum(1 for t, lab in enumerate(labels) if not lab and (t == 0 or labels[t - 1]))
            if count <= g:
                best = min(best, sum(b - a + 1 for a, b in gaps))
    return best
