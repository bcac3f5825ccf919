"""Longest common extension (LCE) and longest gapped palindrome queries.

The index is built over ``T = S $ f(S^R)`` where ``$`` is a reserved rank
that no letter maps to.  A suffix array (prefix doubling), the Kasai LCP
array and a sparse table over it answer each LCE query with one range
minimum.  Construction is O(n log^2 n) in the worst case; queries are O(1).

Positions in the public API are 1-based, as in ``S[1..n]``.
"""
from __future__ import annotations

import numpy as np

from .alphabet import Involution, Sequence


def suffix_array(codes: np.ndarray) -> np.ndarray:
    """Suffix array of an integer text by prefix doubling (0-based)."""
    n = len(codes)
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    _, rank = np.unique(codes, return_inverse=True)
    rank = rank.astype(np.int64)
    sa = np.argsort(rank, kind="stable")
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:] if k < n else second[:0]
        sa = np.lexsort((second, rank))
        r, s = rank[sa], second[sa]
        bumps = np.empty(n, dtype=np.int64)
        bumps[0] = 0
        bumps[1:] = (r[1:] != r[:-1]) | (s[1:] != s[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.cumsum(bumps)
        rank = new_rank
        if rank[sa[-1]] == n - 1:
            return sa
        k *= 2


def lcp_array(codes, sa) -> np.ndarray:
    """Kasai et al.: ``lcp[r]`` is the LCP of suffixes ``sa[r-1]`` and ``sa[r]``; ``lcp[0] = 0``."""
    text = codes.tolist() if isinstance(codes, np.ndarray) else list(codes)
    order = sa.tolist()
    n = len(text)
    rank = [0] * n
    for r, p in enumerate(order):
        rank[p] = r
    lcp = [0] * n
    h = 0
    for p in range(n):
        r = rank[p]
        if r == 0:
            h = 0
            continue
        q = order[r - 1]
        while p + h < n and q + h < n and text[p + h] == text[q + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.asarray(lcp, dtype=np.int64)


class SparseTable:
    """Range minimum over a fixed integer array in O(1) per query."""

    def __init__(self, data: np.ndarray):
        data = np.asarray(data, dtype=np.int64)
        size = len(data)
        depth = max(size, 1).bit_length()
        # row d holds minima of windows of width 2**d; tails past the last window stay unused
        # 32-bit cells halve the memory touched by random queries
        dtype = np.int32 if size < 2 ** 31 else np.int64
        self.table = np.empty((depth, size), dtype=dtype)
        self.table[0] = data
        span = 1
        for d in range(1, depth):
            prev = self.table[d - 1]
            self.table[d, : size - span] = np.minimum(prev[: size - span], prev[span:])
            self.table[d, size - span:] = prev[size - span:]
            span *= 2
        # floor(log2(w)) for every admissible window width w
        self.log = np.zeros(size + 1, dtype=np.int64)
        if size >= 2:
            self.log[2:] = np.floor(np.log2(np.arange(2, size + 1))).astype(np.int64)
            # guard against rounding at exact powers of two
            w = np.arange(size + 1)
            self.log -= np.left_shift(1, self.log) > np.maximum(w, 1)
            self.log += np.left_shift(1, self.log + 1) <= w

    @property
    def levels(self) -> list:
        return [self.table[d, : len(self.table[0]) - (1 << d) + 1] for d in range(len(self.table))]

    def query(self, lo, hi):
        """Minimum of ``data[lo..hi]`` inclusive; ``lo``/``hi`` may be arrays (requires lo <= hi)."""
        lo = np.asarray(lo, dtype=np.int64)
        hi = np.asarray(hi, dtype=np.int64)
        depth = self.log[hi - lo + 1]
        if depth.ndim == 0:
            d = int(depth)
            return int(min(self.table[d, int(lo)], self.table[d, int(hi) - (1 << d) + 1]))
        out = np.minimum(self.table[depth, lo], self.table[depth, hi - np.left_shift(1, depth) + 1])
        return out.astype(np.int64, copy=False)


class LceEngine:
    """LCE index over ``T = S $ f(S^R)`` (length ``2n+1``)."""

    SENTINEL = 0

    def __init__(self, seq: Sequence, f: Involution):
        if seq.n == 0:
            raise ValueError("cannot index an empty sequence")
        f.check_total(seq)
        self.seq = seq
        self.f = f
        self.n = n = seq.n
        images = [f(a) for a in seq.letters]
        codes: dict = {}
        left = [codes.setdefault(a, len(codes) + 1) for a in seq.letters]
        right = [codes.setdefault(b, len(codes) + 1) for b in reversed(images)]
        self.text = np.asarray(left + [self.SENTINEL] + right, dtype=np.int64)
        self.sa = suffix_array(self.text)
        self.rank = np.empty(len(self.sa), dtype=np.int32 if len(self.sa) < 2 ** 31 else np.int64)
        self.rank[self.sa] = np.arange(len(self.sa))
        self.lcp = lcp_array(self.text, self.sa)
        self.rmq = SparseTable(self.lcp)

    def __len__(self) -> int:
        return len(self.text)

    def lce(self, i: int, j: int) -> int:
        """Length of the longest common prefix of ``T[i..]`` and ``T[j..]`` (1-based)."""
        size = len(self.text)
        if not (1 <= i <= size and 1 <= j <= size):
            raise IndexError(f"LCE position out of range 1..{size}: ({i}, {j})")
        if i == j:
            return size - i + 1
        ri, rj = int(self.rank[i - 1]), int(self.rank[j - 1])
        if ri > rj:
            ri, rj = rj, ri
        return int(self.rmq.query(ri + 1, rj))

    def lgpal(self, i: int, j: int) -> int:
        """Largest ``k`` with ``f(S[i-k+1..i]^R) == S[j..j+k-1]``; 0 at the text borders."""
        n = self.n
        if not (0 <= i <= n + 1 and 0 <= j <= n + 1):
            raise IndexError(f"LGPal position out of range 0..{n + 1}: ({i}, {j})")
        if i < 1 or j > n or i > n or j < 1:
            return 0
        return self.lce(j, 2 * n + 2 - i)

    def lgpal_many(self, i, j) -> np.ndarray:
        """Vectorised :meth:`lgpal`; entries with ``i`` or ``j`` outside ``1..n`` give 0."""
        n = self.n
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        out = np.zeros(i.shape, dtype=np.int64)
        ok = (i >= 1) & (i <= n) & (j >= 1) & (j <= n)
        if not ok.any():
            return out
        a = self.rank[j[ok] - 1]
        b = self.rank[2 * n + 1 - i[ok]]
        lo = np.minimum(a, b) + 1
        hi = np.maximum(a, b)
        out[ok] = self.rmq.query(lo, hi)
        return out


def build(seq: Sequence, f: Involution) -> LceEngine:
    return LceEngine(seq, f)
