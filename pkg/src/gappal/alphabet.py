"""Rank reduction of input text and involutions over letters."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence as Seq

DNA_COMPLEMENT = {"A": "T", "T": "A", "C": "G", "G": "C"}


class InvolutionError(ValueError):
    """Raised for a letter map that is not a total self-inverse function."""


@dataclass(frozen=True)
class Sequence:
    """A text together with its first-occurrence rank array.

    ``letters`` keeps the original symbols; ``ranks`` replaces each symbol by
    a positive integer so that equal letters get equal ranks.
    """

    letters: tuple
    ranks: tuple

    @property
    def n(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(map(str, self.letters))

    def factor(self, start: int, end: int) -> tuple:
        """Letters of the 1-based inclusive factor ``S[start..end]``."""
        return self.letters[start - 1:end]


def rank_reduce(raw_text: Iterable[Hashable]) -> Sequence:
    letters = tuple(raw_text)
    table: dict = {}
    ranks = []
    for letter in letters:
        if letter not in table:
            table[letter] = len(table) + 1
        ranks.append(table[letter])
    return Sequence(letters, tuple(ranks))


@dataclass(frozen=True)
class Involution:
    """A self-inverse letter map ``f`` with ``f(f(a)) == a``."""

    mapping: Mapping
    name: str = "custom"
    fixed_points: frozenset = field(init=False)

    def __post_init__(self):
        for a, b in self.mapping.items():
            if b not in self.mapping:
                raise InvolutionError(f"letter {b!r} (image of {a!r}) is outside the declared alphabet")
            if self.mapping[b] != a:
                raise InvolutionError(f"f(f({a!r})) = {self.mapping[b]!r}, expected {a!r}")
        object.__setattr__(self, "fixed_points", frozenset(a for a, b in self.mapping.items() if a == b))

    def __call__(self, letter):
        try:
            return self.mapping[letter]
        except KeyError:
            raise InvolutionError(f"letter {letter!r} is outside the involution's alphabet") from None

    @property
    def alphabet(self) -> frozenset:
        return frozenset(self.mapping)

    @property
    def has_fixed_point(self) -> bool:
        return bool(self.fixed_points)

    def check_total(self, seq: Sequence | Seq) -> None:
        letters = seq.letters if isinstance(seq, Sequence) else seq
        for letter in set(letters):
            if letter not in self.mapping:
                raise InvolutionError(f"letter {letter!r} is outside the involution's alphabet")


class _IdentityMap(dict):
    """Identity over any hashable letter; behaves as a total mapping."""

    def __missing__(self, key):
        return key

    def __contains__(self, key):
        return True


class IdentityInvolution(Involution):
    def __init__(self, alphabet: Iterable[Hashable] = ()):
        mapping = _IdentityMap((a, a) for a in alphabet)
        super().__init__(mapping, "identity")

    def __post_init__(self):
        # identity is self-inverse by construction and has no finite alphabet
        object.__setattr__(self, "fixed_points", frozenset(self.mapping))

    def __call__(self, letter):
        return letter

    @property
    def has_fixed_point(self) -> bool:
        return True

    def check_total(self, seq) -> None:
        return None

    def __reduce__(self):
        return (IdentityInvolution, (tuple(dict.keys(self.mapping)),))


def make_involution(kind: str, pairs: Iterable[tuple] | Mapping | None = None) -> Involution:
    """Build an involution.

    ``kind`` is ``"identity"``, ``"dna_complement"`` (alias ``"dna"``) or
    ``"custom"``.  For ``"custom"``, ``pairs`` lists directed assignments
    ``(a, f(a))``; a mapping is accepted as well.  Every image must itself be
    mapped back, otherwise :class:`InvolutionError` names the offending letter.
    """
    if kind == "identity":
        return IdentityInvolution()
    if kind in ("dna_complement", "dna"):
        return Involution(dict(DNA_COMPLEMENT), "dna_complement")
    if kind == "custom":
        if pairs is None:
            raise InvolutionError("custom involution needs letter pairs")
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        mapping: dict = {}
        for a, b in items:
            if a in mapping and mapping[a] != b:
                raise InvolutionError(f"letter {a!r} is mapped to both {mapping[a]!r} and {b!r}")
            mapping[a] = b
        return Involution(mapping, "custom")
    raise InvolutionError(f"unknown involution kind {kind!r}")


def involution_from_pairs(pairs: Iterable[tuple]) -> Involution:
    """Symmetric closure of ``pairs``: each ``(x, y)`` declares ``f(x)=y`` and ``f(y)=x``."""
    mapping: dict = {}
    for x, y in pairs:
        for a, b in ((x, y), (y, x)):
            if mapping.get(a, b) != b:
                raise InvolutionError(f"letter {a!r} is mapped to both {mapping[a]!r} and {b!r}")
            mapping[a] = b
    return Involution(mapping, "custom")


def read_involution_file(path) -> Involution:
    """Parse lines ``X Y`` (meaning ``f(X)=Y``); blank lines and ``#`` comments are skipped."""
    pairs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise InvolutionError(f"{path}:{lineno}: expected two letters, got {line!r}")
            pairs.append((parts[0], parts[1]))
    if not pairs:
        raise InvolutionError(f"{path}: no letter pairs")
    return involution_from_pairs(pairs)


def apply(f: Involution, letters: Seq) -> list:
    return [f(a) for a in letters]
