"""The braid action on free groups by automorphisms.

The generator ``s_i`` of the braid group on n strands acts on the free group
``F_n`` by

    x_i   ->  x_{i+1}
    x_{i+1} ->  x_{i+1}^-1 * x_i * x_{i+1}
    x_j   ->  x_j               (j not in {i, i+1})

and the action extends to braid words so that ``auto(a) . auto(b) = auto(ab)``
(left action).  This matches the semidirect-product convention
``(x, a)(y, b) = (x * a(y), ab)`` used in :mod:`braidphase.cocycle`.

Worked n = 2 example: for the word ``s*s`` the automorphism is built as
``auto(s) . auto(s)``, so ``x1 -> auto(s)(x2) = x2^-1*x1*x2`` and
``x2 -> auto(s)(x2^-1*x1*x2) = (x1*x2)^-1 * x2 * (x1*x2)``; both images are
conjugation by ``x1*x2``, as direct substitution confirms.

The action is faithful, which is what makes comparing generator images a
sound equality oracle for braid words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import RankError
from .freegroup import FreeWord

if TYPE_CHECKING:  # pragma: no cover
    from .braid import BraidWord

__all__ = [
    "FreeAutomorphism",
    "artin_generator",
    "artin_auto",
    "compose",
    "equal_auto",
    "is_inner_for_pure",
]


@dataclass(frozen=True)
class FreeAutomorphism:
    """An automorphism of F_n recorded by the images of the generators."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError("need one image per generator")
        for w in self.images:
            if w.rank != self.rank:
                raise RankError("image rank does not match automorphism rank")

    @classmethod
    def identity(cls, rank: int) -> FreeAutomorphism:
        return cls(rank, tuple(FreeWord.generator(rank, i) for i in range(1, rank + 1)))

    def __call__(self, word: FreeWord) -> FreeWord:
        """Apply the automorphism: substitute generator images and reduce."""
        if word.rank != self.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {word.rank}")
        raw: list[tuple[int, int]] = []
        for idx, exp in word.letters:
            image = self.images[idx - 1]
            if exp < 0:
                image = image.inverse()
            raw.extend(image.letters * abs(exp))
        return FreeWord(self.rank, raw)


def artin_generator(i: int, n: int, sign: int = 1) -> FreeAutomorphism:
    """The automorphism of F_n induced by s_i (sign=-1 gives its inverse)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    images = [FreeWord.generator(n, j) for j in range(1, n + 1)]
    if sign == 1:
        images[i - 1] = FreeWord.generator(n, i + 1)
        images[i] = FreeWord(n, ((i + 1, -1), (i, 1), (i + 1, 1)))
    else:
        images[i - 1] = FreeWord(n, ((i, 1), (i + 1, 1), (i, -1)))
        images[i] = FreeWord.generator(n, i)
    return FreeAutomorphism(n, tuple(images))


def compose(phi: FreeAutomorphism, psi: FreeAutomorphism) -> FreeAutomorphism:
    """The automorphism w -> phi(psi(w))."""
    if phi.rank != psi.rank:
        raise RankError(f"rank mismatch: {phi.rank} vs {psi.rank}")
    return FreeAutomorphism(phi.rank, tuple(phi(w) for w in psi.images))


def equal_auto(phi: FreeAutomorphism, psi: FreeAutomorphism) -> bool:
    if phi.rank != psi.rank:
        raise RankError(f"rank mismatch: {phi.rank} vs {psi.rank}")
    return phi.images == psi.images


def artin_auto(b: BraidWord) -> FreeAutomorphism:
    """The automorphism of F_n induced by a braid word on n strands."""
    acc = FreeAutomorphism.identity(b.strands)
    for i, sign in b.letters:
        acc = compose(acc, artin_generator(i, b.strands, sign))
    return acc


def _minimal_conjugator(word: FreeWord, index: int) -> FreeWord | None:
    """Shortest c with word == c^-1 * x_index * c, or None.

    Such a c is unique once it is forbidden from starting with a power of
    x_index, and then the reduced word is literally the mirror pattern
    ``c^-1 . x_index . c`` with no cancellation.
    """
    letters = word.letters
    m = len(letters)
    if m % 2 == 0:
        return None
    k = m // 2
    if letters[k] != (index, 1):
        return None
    for t in range(k):
        i, e = letters[t]
        if letters[m - 1 - t] != (i, -e):
            return None
    return FreeWord(word.rank, letters[k + 1 :])


def is_inner_for_pure(b: BraidWord, max_witness_length: int | None = None) -> FreeWord | None:
    """Search for w with artin_auto(b)(y) = w^-1 * y * w for all y.

    On two strands every pure braid acts by such a conjugation, and on any
    number of strands the central powers do (the full twist conjugates by
    x1...xn); a general pure braid merely sends each generator to a conjugate
    of itself, by its own conjugator.  The search is over the one-parameter
    family of candidates read off the image of x1 and returns None when no
    witness of length at most ``max_witness_length`` (default twice the
    input word length) works.  A None result means "not found within the
    bound", never a proof of nonexistence.
    """
    from .braid import is_pure

    if not is_pure(b):
        raise ValueError("braid word is not pure")
    n = b.strands
    auto = artin_auto(b)
    cutoff = max_witness_length if max_witness_length is not None else 2 * len(b.letters)
    base = _minimal_conjugator(auto.images[0], 1)
    if base is None:
        return None
    x1 = FreeWord.generator(n, 1)
    gens = [FreeWord.generator(n, j) for j in range(1, n + 1)]
    for k in sorted(range(-cutoff, cutoff + 1), key=lambda v: (abs(v), v < 0)):
        witness = (x1 ** k) * base
        if witness.length() > cutoff:
            continue
        if all(auto.images[j] == gens[j].conjugate_by(witness) for j in range(n)):
            return witness
    return None
