"""Minimum-total-gap decompositions of a string into palindromic pieces.

Two dynamic programs share the tables

* ``MG[j][q]``: least total gap length over ``S[1..j]`` using at most ``q`` gaps;
* ``MGp[j][q]``: the same, restricted to ``S[j]`` lying inside a gap,

with ``MGp[j][q] = min(MGp[j-1][q], MG[j-1][q-1]) + 1``.  They differ in how
a palindrome ending at ``j`` is found: :func:`min_gap_decompose` walks the
arithmetic-progression triples of palindromic suffixes (one O(1) update per
triple), while :func:`factorize_with_gaps` scans an explicit factor set.

Infinity is the saturating value ``n + 1``.  Backtraces break ties towards a
palindrome rather than a gap, then towards the longest palindrome, and keep
an open gap running rather than opening a new one.
"""
from __future__ import annotations

import gc
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable

from .alphabet import Involution, Sequence, rank_reduce
from .lce import LceEngine
from .maxpal import MaxPalTable, maximal_table
from .triples import INFINITE, iter_triple_sets, trim


class InfeasibleError(ValueError):
    """No decomposition satisfies the gap and length constraints."""


@dataclass(frozen=True)
class Segment:
    start: int
    end: int
    kind: str  # "palindrome" or "gap"
    errors_used: int = 0

    @property
    def length(self) -> int:
        return self.end - self.start + 1


@dataclass
class Decomposition:
    segments: list
    total_gap_length: int
    params: dict = field(default_factory=dict)

    @property
    def gap_count(self) -> int:
        return sum(seg.kind == "gap" for seg in self.segments)

    @property
    def gaps(self) -> list[tuple[int, int]]:
        return [(s.start, s.end) for s in self.segments if s.kind == "gap"]

    @property
    def palindromes(self) -> list[tuple[int, int]]:
        return [(s.start, s.end) for s in self.segments if s.kind == "palindrome"]

    def check(self, n: int, g: int | None = None, m: int | None = None, delta: int | None = None) -> None:
        """Raise ``AssertionError`` unless the segments tile ``1..n`` within the limits."""
        pos = 1
        for seg in self.segments:
            if seg.start != pos or seg.end < seg.start:
                raise AssertionError(f"segment {seg} breaks the tiling at position {pos}")
            if seg.kind == "palindrome":
                if m is not None and seg.length < m:
                    raise AssertionError(f"palindrome {seg} shorter than m={m}")
                if delta is not None and seg.errors_used > delta:
                    raise AssertionError(f"palindrome {seg} exceeds delta={delta}")
            elif seg.kind != "gap":
                raise AssertionError(f"unknown segment kind {seg.kind!r}")
            pos = seg.end + 1
        if pos != n + 1:
            raise AssertionError(f"segments cover 1..{pos - 1}, expected 1..{n}")
        if g is not None and self.gap_count > g:
            raise AssertionError(f"{self.gap_count} gaps exceed g={g}")
        gap_total = sum(s.length for s in self.segments if s.kind == "gap")
        if gap_total != self.total_gap_length:
            raise AssertionError("total_gap_length disagrees with the gap segments")

    def to_dict(self) -> dict:
        return {
            **self.params,
            "total_gap_length": self.total_gap_length,
            "gap_count": self.gap_count,
            "segments": [
                {"start": s.start, "end": s.end, "kind": s.kind, "length": s.length, "errors_used": s.errors_used}
                for s in self.segments
            ],
        }


class FactorSet:
    """Admissible pieces ``(start, end, errors_used)`` indexed by end position."""

    def __init__(self, n: int, factors: Iterable[tuple] = ()):
        self.n = n
        self.by_end: dict[int, list[tuple]] = {}
        count = 0
        for fac in factors:
            start, end = fac[0], fac[1]
            errors = fac[2] if len(fac) > 2 else 0
            if not 1 <= start <= end <= n:
                raise ValueError(f"factor ({start}, {end}) is outside 1..{n}")
            self.by_end.setdefault(end, []).append((start, end, errors))
            count += 1
        for pieces in self.by_end.values():
            pieces.sort()
        self._count = count

    def __len__(self) -> int:
        return self._count

    def __iter__(self):
        for end in sorted(self.by_end):
            yield from self.by_end[end]


@contextmanager
def _gc_paused():
    # the DP allocates O(n g) small lists that the cyclic collector rescans needlessly
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def _check_params(n: int, g: int, m: int | None = None, delta: int | None = None) -> None:
    if g < 0:
        raise ValueError("g must be non-negative")
    if m is not None and m < 1:
        raise ValueError("m must be at least 1")
    if delta is not None and delta < 0:
        raise ValueError("delta must be non-negative")


def _gap_column(MG, MGp, gap_from, j: int, g: int, inf: int) -> None:
    """Fill ``MGp[j][*]`` from row ``j-1``; ``gap_from[j][q]`` is True when a new gap opens at ``j``."""
    prev_mg, prev_gap = MG[j - 1], MGp[j - 1]
    row = MGp[j]
    opened = gap_from[j]
    for q in range(1, g + 1):
        run, fresh = prev_gap[q], prev_mg[q - 1]
        if fresh < run:
            row[q] = min(fresh + 1, inf)
            opened[q] = True
        else:
            row[q] = min(run + 1, inf)


def _backtrace(MG, MGp, pal_from, gap_from, n: int, g: int, errors=None) -> list[Segment]:
    segments = []
    j, q = n, g
    while j > 0:
        start = pal_from[j][q]
        if start:
            segments.append(Segment(start, j, "palindrome", errors(start, j) if errors else 0))
            j = start - 1
            continue
        end = j
        while not gap_from[j][q]:
            j -= 1
        segments.append(Segment(j, end, "gap"))
        j, q = j - 1, q - 1
    segments.reverse()
    return segments


def min_gap_decompose(seq: Sequence | str, f: Involution, g: int, m: int) -> Decomposition:
    """Decompose into generalized palindromes of length >= m with at most g gaps.

    Minimises the total gap length in O(n log n * g) time using the triple
    representation of palindromic suffixes.  ``g = 0`` asks for a gap-free
    decomposition.  Raises :class:`InfeasibleError` if none exists.
    """
    if isinstance(seq, str):
        seq = rank_reduce(seq)
    n = seq.n
    _check_params(n, g, m)
    f.check_total(seq)
    inf = n + 1
    cols = g + 1
    MG = [[0] * cols] + [[inf] * cols for _ in range(n)]
    MGp = [[inf] * cols for _ in range(n + 1)]
    pal_from = [[0] * cols for _ in range(n + 1)]
    gap_from = [[False] * cols for _ in range(n + 1)]
    with _gc_paused():
        _fill_triple_dp(seq, f, g, m, MG, MGp, pal_from, gap_from, inf)

    if MG[n][g] >= inf:
        raise InfeasibleError(f"no decomposition with at most {g} gaps and palindromes of length >= {m}")
    segments = _backtrace(MG, MGp, pal_from, gap_from, n, g)
    return Decomposition(segments, MG[n][g], {"mode": "exact-gaps", "g": g, "m": m})


def _fill_triple_dp(seq, f, g, m, MG, MGp, pal_from, gap_from, inf) -> None:
    cols = g + 1
    # per position: {delta: (values, starts)} for the trimmed run with that difference
    runs: list[dict] = [{} for _ in range(seq.n + 1)]
    for state in iter_triple_sets(seq, f):
        j = state.j
        if g:
            _gap_column(MG, MGp, gap_from, j, g, inf)
        best = list(MGp[j])
        best_from = [0] * cols
        here = runs[j]
        for t in trim(state, m):
            last = t.last
            vals = list(MG[last - 1])
            starts = [last] * cols
            if t.k >= 2:
                prev_vals, prev_starts = runs[j - t.delta][t.delta]
                for q in range(cols):
                    if prev_vals[q] <= vals[q]:
                        vals[q], starts[q] = prev_vals[q], prev_starts[q]
            if t.delta != INFINITE:
                here[t.delta] = (vals, starts)
            for q in range(cols):
                # earlier triples hold longer palindromes; keep them on ties
                if vals[q] < best[q] or (vals[q] == best[q] and not best_from[q]):
                    best[q], best_from[q] = vals[q], starts[q]
        MG[j] = best
        pal_from[j] = best_from


def factorize_with_gaps(n: int, F: FactorSet | Iterable[tuple], g: int) -> Decomposition:
    """Optimal (g, F)-factorization: pieces from ``F`` plus at most ``g`` gaps, least total gap length.

    Runs in O((n + |F|) * g).  Raises :class:`InfeasibleError` if ``S`` cannot
    be tiled that way.
    """
    _check_params(n, g)
    if not isinstance(F, FactorSet):
        F = FactorSet(n, F)
    elif F.n != n:
        raise ValueError(f"factor set is for n={F.n}, not n={n}")
    inf = n + 1
    cols = g + 1
    MG = [[0] * cols] + [[inf] * cols for _ in range(n)]
    MGp = [[inf] * cols for _ in range(n + 1)]
    pal_from = [[0] * cols for _ in range(n + 1)]
    gap_from = [[False] * cols for _ in range(n + 1)]
    errors: dict = {}

    with _gc_paused():
        _fill_factor_dp(n, F, g, MG, MGp, pal_from, gap_from, errors, inf)

    if MG[n][g] >= inf:
        raise InfeasibleError(f"no ({g}, F)-factorization exists")
    segments = _backtrace(MG, MGp, pal_from, gap_from, n, g, lambda a, b: errors[a, b])
    return Decomposition(segments, MG[n][g], {"g": g})


def _fill_factor_dp(n, F, g, MG, MGp, pal_from, gap_from, errors, inf) -> None:
    cols = g + 1
    for j in range(1, n + 1):
        if g:
            _gap_column(MG, MGp, gap_from, j, g, inf)
        best = list(MGp[j])
        best_from = pal_from[j]
        for start, end, err in F.by_end.get(j, ()):  # ascending start: longest first
            errors[start, end] = err
            src = MG[start - 1]
            for q in range(cols):
                if src[q] < best[q] or (src[q] == best[q] and not best_from[q]):
                    best[q], best_from[q] = src[q], start
        MG[j] = best


def maximal_factor_set(table: MaxPalTable, m: int) -> FactorSet:
    """Row ``delta`` of ``table`` restricted to lengths >= m, with exact error counts."""
    factors = []
    for ext in table.extents(table.delta):
        if ext.length >= m:
            factors.append((ext.start, ext.end, table.errors_needed(ext.start, ext.end)))
    return FactorSet(table.n, factors)


def maximal_delta_decompose(seq: Sequence | str, f: Involution, g: int, m: int, delta: int,
                            metric: str = "edit", table: MaxPalTable | None = None) -> Decomposition:
    """Decompose into maximal generalized delta-palindromes (length >= m) with at most g gaps.

    ``metric`` is ``"hamming"`` or ``"edit"``.  Only the maximal
    delta-palindrome of each center is an admissible piece, so at most
    ``2n - 1`` factors feed :func:`factorize_with_gaps`; total time is
    O(n * (g + delta)) after index construction.  A precomputed ``table``
    with the same ``delta`` and metric may be passed to skip that step.
    """
    if isinstance(seq, str):
        seq = rank_reduce(seq)
    if metric not in ("hamming", "edit"):
        raise ValueError(f"metric must be 'hamming' or 'edit', not {metric!r}")
    _check_params(seq.n, g, m, delta)
    params = {"mode": "maximal-delta", "metric": metric, "g": g, "m": m, "delta": delta}
    if seq.n == 0:
        return Decomposition([], 0, params)
    if table is None:
        table = maximal_table(seq, f, LceEngine(seq, f), delta, metric)
    elif table.delta != delta or table.metric not in (metric, "exact"):
        raise ValueError("precomputed table does not match delta/metric")
    try:
        result = factorize_with_gaps(seq.n, maximal_factor_set(table, m), g)
    except InfeasibleError:
        raise InfeasibleError(
            f"no decomposition into maximal {delta}-palindromes (length >= {m}) with at most {g} gaps"
        ) from None
    result.params = params
    return result
