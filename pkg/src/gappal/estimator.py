"""scikit-learn style wrapper around the decomposition algorithms."""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .alphabet import Involution, Sequence, make_involution, rank_reduce
from .decompose import InfeasibleError, maximal_delta_decompose, min_gap_decompose


def check_sequences(X) -> list:
    """Coerce ``X`` to a list of sequences (a lone string counts as one sequence)."""
    if isinstance(X, (str, Sequence)):
        return [X]
    try:
        items = list(X)
    except TypeError:
        raise TypeError(f"expected a string or an iterable of strings, got {type(X).__name__}") from None
    for item in items:
        if not isinstance(item, (str, Sequence, tuple, list)):
            raise TypeError(f"sequences must be strings, got {type(item).__name__}")
    return items


class PalindromicDecomposer(TransformerMixin, BaseEstimator):
    """Minimum-total-gap decomposition of each input string into generalized palindromes.

    Parameters
    ----------
    g : int
        Maximum number of gaps.
    m : int
        Minimum length of each palindromic piece.
    delta : int or None
        Errors allowed per piece.  ``None`` selects exact palindromes (any
        palindromic factor may be a piece); an integer selects maximal
        ``delta``-palindromes under ``metric``.
    metric : {"edit", "hamming"}
        Distance used when ``delta`` is given.
    involution : {"identity", "dna"} or Involution
        Letter map defining generalized palindromes.
    upper : bool
        Upper-case string inputs before decomposing.
    on_infeasible : {"raise", "none"}
        What :meth:`transform` does for a string with no valid decomposition.
    """

    def __init__(self, g=1, m=1, delta=None, metric="edit", involution="identity", upper=True,
                 on_infeasible="raise"):
        self.g = g
        self.m = m
        self.delta = delta
        self.metric = metric
        self.involution = involution
        self.upper = upper
        self.on_infeasible = on_infeasible

    def _validate_params(self):
        if not isinstance(self.g, int) or self.g < 0:
            raise ValueError(f"g must be a non-negative integer, got {self.g!r}")
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        if self.delta is not None and (not isinstance(self.delta, int) or self.delta < 0):
            raise ValueError(f"delta must be None or a non-negative integer, got {self.delta!r}")
        if self.metric not in ("edit", "hamming"):
            raise ValueError(f"metric must be 'edit' or 'hamming', got {self.metric!r}")
        if self.on_infeasible not in ("raise", "none"):
            raise ValueError("on_infeasible must be 'raise' or 'none'")

    def fit(self, X=None, y=None):
        """Validate parameters and resolve the involution; no data is learned."""
        self._validate_params()
        if isinstance(self.involution, Involution):
            self.involution_ = self.involution
        else:
            self.involution_ = make_involution(self.involution)
        return self

    def _prepare(self, x):
        if isinstance(x, Sequence):
            return x
        if isinstance(x, str):
            x = x.upper() if self.upper else x
        return rank_reduce(x)

    def decompose(self, x):
        """Decomposition of a single sequence."""
        check_is_fitted(self, "involution_")
        seq = self._prepare(x)
        if self.delta is None:
            return min_gap_decompose(seq, self.involution_, self.g, self.m)
        return maximal_delta_decompose(seq, self.involution_, self.g, self.m, self.delta, self.metric)

    def transform(self, X):
        """List of :class:`~gappal.decompose.Decomposition`, one per input sequence."""
        check_is_fitted(self, "involution_")
        out = []
        for x in check_sequences(X):
            try:
                out.append(self.decompose(x))
            except InfeasibleError:
                if self.on_infeasible == "raise":
                    raise
                out.append(None)
        return out

    def predict(self, X):
        """Total gap length per sequence (``None`` where infeasible and ``on_infeasible='none'``)."""
        return [None if d is None else d.total_gap_length for d in self.transform(X)]
