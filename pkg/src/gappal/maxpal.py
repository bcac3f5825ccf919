"""Maximal generalized palindromes, exact and with errors.

Centers are addressed by ``twice = start + end`` (1-based), so integer centers
are even and half-integer centers odd; ``twice`` ranges over ``2..2n``.  An
empty extent at a half-integer center is stored as ``start = end + 1``.

Each table row ``d`` holds, per center, the longest factor that is within
``d`` errors of a generalized palindrome under the table's metric.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .alphabet import Involution, Sequence
from .lce import LceEngine

METRICS = ("exact", "hamming", "edit")


class PalExtent(NamedTuple):
    start: int
    end: int
    errors_used: int = 0

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def twice_center(self) -> int:
        return self.start + self.end

    @property
    def center(self) -> float:
        return (self.start + self.end) / 2


@dataclass
class MaxPalTable:
    """Per-row, per-center maximal extents.

    ``lengths[d][t]`` is the length of the maximal ``d``-palindrome at
    ``twice = t`` or ``-1`` when no such palindrome exists.  Indices 0, 1 and
    ``2n + 1`` of each row are padding so that ``t`` indexes directly.
    """

    metric: str
    delta: int
    n: int
    lengths: np.ndarray  # shape (delta + 1, 2n + 2)

    def get(self, d: int, twice: int) -> PalExtent | None:
        length = int(self.lengths[d, twice])
        if length < 0:
            return None
        start = (twice - length + 1) // 2
        return PalExtent(start, start + length - 1, d)

    def row(self, d: int) -> dict:
        """Row ``d`` as ``{twice: PalExtent}``."""
        return {t: self.get(d, t) for t in self.centers() if self.lengths[d, t] >= 0}

    def centers(self) -> range:
        return range(2, 2 * self.n + 1)

    def extents(self, d: int) -> Iterator[PalExtent]:
        for t in self.centers():
            ext = self.get(d, t)
            if ext is not None:
                yield ext

    def errors_needed(self, start: int, end: int) -> int | None:
        """Smallest ``d`` whose maximal extent at this center covers ``S[start..end]``."""
        t = start + end
        length = end - start + 1
        for d in range(self.delta + 1):
            if self.lengths[d, t] >= length:
                return d
        return None

    def as_strings(self, seq: Sequence, d: int) -> dict:
        """Row ``d`` rendered as ``{center: factor string}`` (for display and tests)."""
        out = {}
        for t, ext in self.row(d).items():
            out[t / 2] = "".join(map(str, seq.factor(ext.start, ext.end)))
        return out


def _center_seeds(seq: Sequence, f: Involution):
    """Row-0 starting extents before extension, plus per-center error cost.

    Returns ``(twice, start, end, cost)`` arrays where ``cost`` is the number of
    errors charged for the middle letter (``-1`` when the center can host no
    palindrome at all under Hamming distance).
    """
    n = seq.n
    twice = np.arange(2, 2 * n + 1, dtype=np.int64)
    even = twice % 2 == 0
    start = np.where(even, twice // 2, (twice + 1) // 2)
    end = np.where(even, twice // 2, (twice - 1) // 2)
    self_mirror = np.array([f(a) == a for a in seq.letters], dtype=bool)
    mid = twice[even] // 2
    cost = np.zeros(len(twice), dtype=np.int64)
    mid_ok = self_mirror[mid - 1]
    cost[even] = np.where(mid_ok, 0, 1 if f.has_fixed_point else -1)
    return twice, start, end, cost


def maximal_hamming(seq: Sequence, f: Involution, engine: LceEngine, delta: int) -> MaxPalTable:
    """Maximal generalized d-palindromes under Hamming distance for ``d = 0..delta``.

    One LGPal query per center and per allowed mismatch.  At an integer center
    whose letter is not a fixed point of ``f``, the middle letter costs one
    error when ``f`` has a fixed point; otherwise no odd-length palindrome exists.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    n = seq.n
    lengths = np.full((delta + 1, 2 * n + 2), -1, dtype=np.int64)
    twice, start, end, cost = _center_seeds(seq, f)
    alive = cost >= 0
    twice, start, end, cost = twice[alive], start[alive], end[alive], cost[alive]
    k = engine.lgpal_many(start - 1, end + 1)
    start, end = start - k, end + k
    used = cost
    for d in range(delta + 1):
        ready = used <= d
        lengths[d, twice[ready]] = (end - start + 1)[ready]
        if d == delta:
            break
        # spend one more error on the mismatch that stopped each extent
        grow = (used == d) & (start > 1) & (end < n)
        s, e = start[grow] - 1, end[grow] + 1
        k = engine.lgpal_many(s - 1, e + 1)
        start[grow], end[grow] = s - k, e + k
        used[grow] = d + 1
    return MaxPalTable("hamming", delta, n, lengths)


def maximal_exact(seq: Sequence, f: Involution, engine: LceEngine) -> MaxPalTable:
    """All maximal generalized palindromes (one LGPal query per center)."""
    n = seq.n
    lengths = np.full((1, 2 * n + 2), -1, dtype=np.int64)
    twice, start, end, cost = _center_seeds(seq, f)
    ok = cost == 0
    k = engine.lgpal_many(start[ok] - 1, end[ok] + 1)
    lengths[0, twice[ok]] = end[ok] - start[ok] + 1 + 2 * k
    return MaxPalTable("exact", 0, n, lengths)


def extend(pal: PalExtent, engine: LceEngine) -> list[PalExtent]:
    """The (up to three) one-error extensions of a generalized d-palindrome.

    Ignore ``S[i-1]``, ignore ``S[j+1]``, or ignore both, then grow with one
    LGPal query.  An extension whose ignored letter lies outside the text is
    omitted.
    """
    i, j, d = pal
    n = engine.n
    out = []
    if i >= 2:
        k = engine.lgpal(i - 2, j + 1)
        out.append(PalExtent(i - 1 - k, j + k, d + 1))
    if j <= n - 1:
        k = engine.lgpal(i - 1, j + 2)
        out.append(PalExtent(i - k, j + 1 + k, d + 1))
    if i >= 2 and j <= n - 1:
        k = engine.lgpal(i - 2, j + 2)
        out.append(PalExtent(i - 1 - k, j + 1 + k, d + 1))
    return out


def border_reduce(pal: PalExtent, n: int) -> list[PalExtent]:
    """Drop the last letter of a text prefix or the first letter of a text suffix."""
    i, j, d = pal
    out = []
    if pal.length <= 0:
        return out
    if i == 1:
        out.append(PalExtent(1, j - 1, d + 1))
    if j == n:
        out.append(PalExtent(i + 1, n, d + 1))
    return out


def _next_edit_row(n: int, engine: LceEngine, row: np.ndarray) -> np.ndarray:
    """Vectorised extension + border reduction of one row; keeps the longest per center."""
    twice = np.nonzero(row >= 0)[0]
    length = row[twice]
    i = (twice - length + 1) // 2
    j = i + length - 1

    cand_t = [twice]
    cand_len = [length]

    left = i >= 2
    right = j <= n - 1
    both = left & right
    if left.any():
        a, b = i[left], j[left]
        k = engine.lgpal_many(a - 2, b + 1)
        cand_t.append(a + b - 1)
        cand_len.append(b - a + 2 + 2 * k)
    if right.any():
        a, b = i[right], j[right]
        k = engine.lgpal_many(a - 1, b + 2)
        cand_t.append(a + b + 1)
        cand_len.append(b - a + 2 + 2 * k)
    if both.any():
        a, b = i[both], j[both]
        k = engine.lgpal_many(a - 2, b + 2)
        cand_t.append(a + b)
        cand_len.append(b - a + 3 + 2 * k)
    nonempty = length > 0
    pre = nonempty & (i == 1)
    if pre.any():
        cand_t.append(i[pre] + j[pre] - 1)
        cand_len.append(length[pre] - 1)
    suf = nonempty & (j == n)
    if suf.any():
        cand_t.append(i[suf] + j[suf] + 1)
        cand_len.append(length[suf] - 1)

    t = np.concatenate(cand_t)
    ln = np.concatenate(cand_len)
    keep = (t >= 1) & (t <= 2 * n + 1)
    out = np.full_like(row, -1)
    # bucket by center, longest wins
    np.maximum.at(out, t[keep], ln[keep])
    return out


def maximal_edit(seq: Sequence, f: Involution, engine: LceEngine, delta: int) -> MaxPalTable:
    """Maximal generalized d-palindromes under edit distance for ``d = 0..delta``.

    Row ``d+1`` comes from row ``d`` by trying the three extensions and both
    border reductions of every entry, then keeping the longest candidate per
    center.  Each level is O(n) LGPal queries.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    n = seq.n
    lengths = np.full((delta + 1, 2 * n + 2), -1, dtype=np.int64)
    lengths[0] = maximal_exact(seq, f, engine).lengths[0]
    # empty seeds just outside the text; needed when n == 1
    lengths[:, 1] = lengths[:, 2 * n + 1] = 0
    for d in range(delta):
        lengths[d + 1] = _next_edit_row(n, engine, lengths[d])
        lengths[d + 1, [1, 2 * n + 1]] = 0
    lengths[:, [1, 2 * n + 1]] = -1
    return MaxPalTable("edit", delta, n, lengths)


def maximal_table(seq: Sequence, f: Involution, engine: LceEngine, delta: int, metric: str) -> MaxPalTable:
    if metric == "hamming":
        return maximal_hamming(seq, f, engine, delta)
    if metric == "edit":
        return maximal_edit(seq, f, engine, delta)
    if metric == "exact":
        if delta:
            raise ValueError("exact metric admits no errors")
        return maximal_exact(seq, f, engine)
    raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")
