"""Decompose strings into generalized palindromes with bounded gaps and errors."""
from .alphabet import Involution, InvolutionError, Sequence, make_involution, rank_reduce
from .decompose import (
    Decomposition,
    FactorSet,
    InfeasibleError,
    Segment,
    factorize_with_gaps,
    maximal_delta_decompose,
    min_gap_decompose,
)
from .estimator import PalindromicDecomposer
from .lce import LceEngine, build
from .maxpal import MaxPalTable, PalExtent, maximal_edit, maximal_exact, maximal_hamming
from .triples import Triple, TripleSet, advance, iter_triple_sets, trim

__all__ = [
    "Decomposition",
    "FactorSet",
    "InfeasibleError",
    "Involution",
    "InvolutionError",
    "LceEngine",
    "MaxPalTable",
    "PalExtent",
    "PalindromicDecomposer",
    "Segment",
    "Sequence",
    "Triple",
    "TripleSet",
    "advance",
    "build",
    "factorize_with_gaps",
    "iter_triple_sets",
    "make_involution",
    "maximal_delta_decompose",
    "maximal_edit",
    "maximal_exact",
    "maximal_hamming",
    "min_gap_decompose",
    "rank_reduce",
    "trim",
]

__version__ = "0.1.0"
