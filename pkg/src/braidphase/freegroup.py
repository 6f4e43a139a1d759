"""Reduced words in finitely generated free groups and circle-valued characters.

Words are stored run-length encoded as ``(generator index, exponent)`` pairs
and kept fully reduced, so structural equality coincides with equality in the
group and equality tests are linear in the word length.  Generators are
1-based: ``x1, ..., xn``.  Every word carries its rank and binary operations
check ranks; promotion to a bigger rank is always explicit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError, RankError
from .phase import Angle

__all__ = [
    "FreeWord",
    "Character",
    "OrbitProbe",
    "conjugate_orbit_probe",
    "iter_reduced_words",
    "parse_free_word",
]


def _reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for idx, exp in letters:
        idx, exp = int(idx), int(exp)
        if exp == 0:
            continue
        if stack and stack[-1][0] == idx:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged:
                stack.append((idx, merged))
        else:
            stack.append((idx, exp))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """A reduced word in the free group of the given rank."""

    rank: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be positive")
        reduced = _reduce(self.letters)
        for idx, _ in reduced:
            if not 1 <= idx <= self.rank:
                raise RankError(f"generator x{idx} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", reduced)

    @classmethod
    def identity(cls, rank: int) -> FreeWord:
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int, exp: int = 1) -> FreeWord:
        return cls(rank, ((index, exp),))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def _check_rank(self, other: FreeWord) -> None:
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __mul__(self, other: FreeWord) -> FreeWord:
        if not isinstance(other, FreeWord):
            return NotImplemented
        self._check_rank(other)
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple((i, -e) for i, e in reversed(self.letters)))

    def __pow__(self, n: int) -> FreeWord:
        if n == 0:
            return FreeWord(self.rank)
        base = self if n > 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(n))

    def conjugate_by(self, g: FreeWord) -> FreeWord:
        """g^-1 * self * g."""
        self._check_rank(g)
        return g.inverse() * self * g

    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def abelianize(self) -> tuple[int, ...]:
        """Exponent sum of each generator."""
        out = [0] * self.rank
        for idx, exp in self.letters:
            out[idx - 1] += exp
        return tuple(out)

    def promote(self, rank: int) -> FreeWord:
        """The same word viewed in a free group of larger rank."""
        if rank < self.rank:
            raise RankError(f"cannot demote rank {self.rank} word to rank {rank}")
        return FreeWord(rank, self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return "*".join(
            f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.letters
        )

    def __repr__(self) -> str:
        return f"FreeWord({self.rank}, {str(self)!r})"


_WORD_TOKEN_RE = re.compile(r"([A-Za-z]+)(\d+)(?:\^(-?\d+))?\Z")


def _parse_word_tokens(text: str, letter: str) -> list[tuple[int, int]]:
    s = text.replace(" ", "")
    if s in ("", "e"):
        return []
    letters: list[tuple[int, int]] = []
    for token in s.split("*"):
        m = _WORD_TOKEN_RE.match(token)
        if m is None or m.group(1) != letter:
            raise ParseError(f"cannot parse token {token!r} in word {text!r}")
        exp = int(m.group(3)) if m.group(3) is not None else 1
        letters.append((int(m.group(2)), exp))
    return letters


def parse_free_word(text: str, rank: int) -> FreeWord:
    """Parse words like ``x1*x2^-1*x1^2`` (``e`` is the identity)."""
    return FreeWord(rank, _parse_word_tokens(text, "x"))


def iter_reduced_words(rank: int, max_length: int) -> Iterator[FreeWord]:
    """All reduced words of length <= max_length, shortest first.

    Within one length the order is lexicographic in the unit letters, with
    x1 < x1^-1 < x2 < x2^-1 < ...; the enumeration is deterministic.
    """
    yield FreeWord(rank)
    frontier: list[tuple[tuple[int, int], ...]] = [()]
    for _ in range(max_length):
        extended: list[tuple[tuple[int, int], ...]] = []
        for word in frontier:
            for idx in range(1, rank + 1):
                for sign in (1, -1):
                    if word and word[-1] == (idx, -sign):
                        continue
                    extended.append(word + ((idx, sign),))
        for word in extended:
            yield FreeWord(rank, word)
        frontier = extended


@dataclass(frozen=True)
class Character:
    """A homomorphism from the free group to the circle, given on generators."""

    rank: int
    values: tuple[Angle, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.rank:
            raise ValueError("need one angle per generator")

    def __call__(self, word: FreeWord) -> Angle:
        if word.rank != self.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {word.rank}")
        total = Angle.zero()
        for idx, exp in word.letters:
            total = total + self.values[idx - 1].scale(exp)
        return total


@dataclass(frozen=True)
class OrbitProbe:
    """Outcome of a bounded conjugacy-orbit enumeration.

    This is a semi-decision: ``stabilized`` reports that every conjugator up
    to the bound fixed the element, not that the conjugacy class is a
    singleton.
    """

    size: int
    stabilized: bool
    samples: tuple[object, ...]


def conjugate_orbit_probe(g, bound: int) -> OrbitProbe:
    """Enumerate {x g x^-1 : |x| <= bound} with exact de-duplication.

    ``g`` may be a :class:`FreeWord` (conjugation inside the free group) or a
    semidirect-product element exposing ``free`` and ``conjugated_by_free``;
    in the latter case conjugators range over the free normal subgroup.
    """
    if bound < 1:
        raise ValueError("conjugator bound must be >= 1")
    if isinstance(g, FreeWord):
        rank = g.rank

        def conjugate(x: FreeWord):
            return x * g * x.inverse()

        def key(h):
            return h
    else:
        rank = g.free.rank
        conjugate = g.conjugated_by_free

        def key(h):
            return h.free

    seen: dict[object, object] = {}
    samples: list[object] = []
    for x in iter_reduced_words(rank, bound):
        h = conjugate(x)
        k = key(h)
        if k not in seen:
            seen[k] = h
            if len(samples) < 5:
                samples.append(h)
    return OrbitProbe(size=len(seen), stabilized=len(seen) == 1, samples=tuple(samples))
