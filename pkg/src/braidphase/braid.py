"""Braid words, word-problem oracles, distinguished elements, and rewriting.

A :class:`BraidWord` is a word in the generators ``s1, ..., s_{n-1}`` of the
braid group on n strands.  Free reduction (cancelling ``s_i s_i^-1``) is
applied eagerly on construction; no other relation is, so structural equality
of words is *not* group equality.  Two independent oracles decide the word
problem:

* :func:`equal` compares the induced free-group automorphisms (the action is
  faithful), and
* :func:`garside_normal_form` computes the left-greedy canonical form
  ``Delta^p A_1 ... A_k`` whose factors are permutation braids; words are
  equal exactly when their forms coincide.

The module also builds the standard pure-braid generators

    a_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1,

the half twist ``Delta`` and the full twist ``z = Delta^2``, and rewrites an
arbitrary pure word into the ``a_{i,j}`` alphabet by coset rewriting along a
tower of point-stabilizer subgroups (see :func:`rewrite_pure`).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from . import artin
from .errors import ParseError, RankError
from .freegroup import FreeWord, _parse_word_tokens

__all__ = [
    "Permutation",
    "BraidWord",
    "GarsideForm",
    "PureWord",
    "permutation_of",
    "is_pure",
    "pure_generator",
    "delta",
    "center_z",
    "center_z_pure_word",
    "equal",
    "garside_normal_form",
    "rewrite_pure",
    "embed",
    "p3_image",
    "parse_braid_word",
    "parse_pure_word",
    "random_braid_word",
    "random_pure_braid_word",
    "random_equal_pair",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n}; image[i-1] is the image of i.

    Multiplication is composition of functions: (p * q)(i) = p(q(i)).
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.image}")

    @property
    def size(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        if not 1 <= i <= n - 1:
            raise ValueError(f"transposition index {i} out of range for size {n}")
        image = list(range(1, n + 1))
        image[i - 1], image[i] = image[i], image[i - 1]
        return cls(tuple(image))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.image[j - 1] for j in other.image))

    def inverse(self) -> Permutation:
        image = [0] * self.size
        for i, v in enumerate(self.image, start=1):
            image[v - 1] = i
        return Permutation(tuple(image))

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image, start=1))

    def inversions(self) -> int:
        img = self.image
        return sum(
            1
            for a in range(len(img))
            for b in range(a + 1, len(img))
            if img[a] > img[b]
        )

    def right_descents(self) -> set[int]:
        """Indices i with image(i) > image(i+1)."""
        return {i for i in range(1, self.size) if self.image[i - 1] > self.image[i]}

    def left_descents(self) -> set[int]:
        return self.inverse().right_descents()

    def conjugate_by_longest(self) -> Permutation:
        n = self.size
        return Permutation(tuple(n + 1 - self.image[n - i] for i in range(1, n + 1)))

    def reduced_word(self) -> tuple[int, ...]:
        """A deterministic reduced word whose left-to-right product is self."""
        word: list[int] = []
        p = self
        while not p.is_identity:
            i = min(p.right_descents())
            word.append(i)
            p = p * Permutation.transposition(p.size, i)
        return tuple(reversed(word))


def _reduce_braid(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for i, e in letters:
        i, e = int(i), int(e)
        if e == 0:
            continue
        sign = 1 if e > 0 else -1
        for _ in range(abs(e)):
            if stack and stack[-1] == (i, -sign):
                stack.pop()
            else:
                stack.append((i, sign))
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced word in the braid generators on ``strands`` strands.

    Structural equality compares words letter by letter; group equality is
    :func:`equal`.  Letters with larger exponents are accepted on input and
    expanded to unit letters.
    """

    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        reduced = _reduce_braid(self.letters)
        for i, _ in reduced:
            if not 1 <= i <= self.strands - 1:
                raise RankError(
                    f"generator s{i} out of range for {self.strands} strands"
                )
        object.__setattr__(self, "letters", reduced)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands)

    @classmethod
    def generator(cls, strands: int, i: int, sign: int = 1) -> BraidWord:
        return cls(strands, ((i, sign),))

    @property
    def is_trivial_word(self) -> bool:
        return not self.letters

    def _check(self, other: BraidWord) -> None:
        if self.strands != other.strands:
            raise RankError(f"strand mismatch: {self.strands} vs {other.strands}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        self._check(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def __pow__(self, n: int) -> BraidWord:
        if n == 0:
            return BraidWord(self.strands)
        base = self if n > 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(n))

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        runs: list[tuple[int, int]] = []
        for i, e in self.letters:
            if runs and runs[-1][0] == i and (runs[-1][1] > 0) == (e > 0):
                runs[-1] = (i, runs[-1][1] + e)
            else:
                runs.append((i, e))
        return "*".join(f"s{i}" if e == 1 else f"s{i}^{e}" for i, e in runs)

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {str(self)!r})"


def permutation_of(b: BraidWord) -> Permutation:
    """Image of the braid under the surjection onto the symmetric group."""
    image = list(range(1, b.strands + 1))
    for i, _ in b.letters:
        image[i - 1], image[i] = image[i], image[i - 1]
    return Permutation(tuple(image))


def is_pure(b: BraidWord) -> bool:
    """True iff the braid lies in the kernel of the symmetric-group map."""
    return permutation_of(b).is_identity


def pure_generator(i: int, j: int, n: int) -> BraidWord:
    """The pure braid a_{i,j} = s_{j-1}...s_{i+1} s_i^2 s_{i+1}^-1...s_{j-1}^-1."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    pre = [(k, 1) for k in range(j - 1, i, -1)]
    post = [(k, -1) for k in range(i + 1, j)]
    return BraidWord(n, tuple(pre) + ((i, 1), (i, 1)) + tuple(post))


def delta(n: int) -> BraidWord:
    """The half twist Delta = s1 (s2 s1) ... (s_{n-1} ... s1)."""
    if n < 2:
        raise ValueError("need at least 2 strands")
    letters = [(i, 1) for k in range(1, n) for i in range(k, 0, -1)]
    return BraidWord(n, tuple(letters))


def center_z(n: int) -> BraidWord:
    """The full twist z = Delta^2, the standard central element."""
    return delta(n) * delta(n)


def equal(a: BraidWord, b: BraidWord) -> bool:
    """Group equality via the faithful action on the free group."""
    a._check(b)
    if permutation_of(a) != permutation_of(b):
        return False
    return artin.artin_auto(a) == artin.artin_auto(b)


def embed(b: BraidWord, strands: int) -> BraidWord:
    """The same word viewed in a braid group on more strands."""
    if strands < b.strands:
        raise RankError(f"cannot embed {b.strands} strands into {strands}")
    return BraidWord(strands, b.letters)


# ---------------------------------------------------------------------------
# Garside left normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GarsideForm:
    """Left normal form Delta^power A_1 ... A_k.

    Factors are permutation braids recorded by their permutations, none of
    them trivial or the half twist, and each adjacent pair is left-weighted.
    Two braid words are equal exactly when their forms are equal.
    """

    strands: int
    power: int
    factors: tuple[Permutation, ...]

    def as_braid_word(self) -> BraidWord:
        letters: list[tuple[int, int]] = []
        d = delta(self.strands)
        if self.power >= 0:
            letters.extend(d.letters * self.power)
        else:
            letters.extend(d.inverse().letters * (-self.power))
        for p in self.factors:
            letters.extend((i, 1) for i in p.reduced_word())
        return BraidWord(self.strands, tuple(letters))

    def __str__(self) -> str:
        out = f"D^{self.power}"
        for p in self.factors:
            out += " * (" + "*".join(f"s{i}" for i in p.reduced_word()) + ")"
        return out


def _left_weight(n: int, factors: list[Permutation]) -> tuple[int, list[Permutation]]:
    """Sweep a list of permutation-braid factors into left-weighted form.

    Returns the power of Delta absorbed from the front together with the
    remaining factors.  Each local fix moves crossings to the left, so the
    sweeps terminate.
    """
    w0 = Permutation.longest(n)
    fs = list(factors)
    changed = True
    while changed:
        changed = False
        for t in range(len(fs) - 1):
            a, b = fs[t], fs[t + 1]
            moved = False
            while True:
                need = b.left_descents() - a.right_descents()
                if not need:
                    break
                j = min(need)
                tj = Permutation.transposition(n, j)
                a = a * tj
                b = tj * b
                moved = True
            if moved:
                fs[t], fs[t + 1] = a, b
                changed = True
    power = 0
    while fs and fs[0] == w0:
        power += 1
        fs.pop(0)
    while fs and fs[-1].is_identity:
        fs.pop()
    return power, fs


def garside_normal_form(b: BraidWord) -> GarsideForm:
    """Canonical left normal form; the second word-problem oracle."""
    n = b.strands
    w0 = Permutation.longest(n)
    chunks: list[tuple[int, Permutation]] = []
    for i, e in b.letters:
        t = Permutation.transposition(n, i)
        # s_i is the lift of the transposition; s_i^-1 = Delta^-1 (Delta s_i^-1)
        # whose positive part is the lift of w0 * t.
        chunks.append((0, t) if e == 1 else (-1, w0 * t))
    total = sum(d for d, _ in chunks)
    positive: list[Permutation] = []
    behind = 0  # Delta power strictly to the right, moved left past this factor
    for d, p in reversed(chunks):
        positive.append(p.conjugate_by_longest() if behind % 2 else p)
        behind += d
    positive.reverse()
    extra, factors = _left_weight(n, positive)
    return GarsideForm(n, total + extra, tuple(factors))


# ---------------------------------------------------------------------------
# The a_{i,j} alphabet and pure-braid rewriting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PureWord:
    """A word in the pure-braid generators a_{i,j}, 1 <= i < j <= strands."""

    strands: int
    letters: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        stack: list[tuple[tuple[int, int], int]] = []
        for pair, exp in self.letters:
            i, j = int(pair[0]), int(pair[1])
            exp = int(exp)
            if not 1 <= i < j <= self.strands:
                raise RankError(f"a({i},{j}) out of range for {self.strands} strands")
            if exp == 0:
                continue
            if stack and stack[-1][0] == (i, j):
                merged = stack[-1][1] + exp
                stack.pop()
                if merged:
                    stack.append(((i, j), merged))
            else:
                stack.append(((i, j), exp))
        object.__setattr__(self, "letters", tuple(stack))

    @classmethod
    def identity(cls, strands: int) -> PureWord:
        return cls(strands)

    def __mul__(self, other: PureWord) -> PureWord:
        if not isinstance(other, PureWord):
            return NotImplemented
        if self.strands != other.strands:
            raise RankError(f"strand mismatch: {self.strands} vs {other.strands}")
        return PureWord(self.strands, self.letters + other.letters)

    def inverse(self) -> PureWord:
        return PureWord(
            self.strands, tuple((pair, -e) for pair, e in reversed(self.letters))
        )

    def expand(self) -> BraidWord:
        """Substitute each a_{i,j} by its defining braid word."""
        letters: list[tuple[int, int]] = []
        for (i, j), exp in self.letters:
            gen = pure_generator(i, j, self.strands)
            word = gen if exp > 0 else gen.inverse()
            letters.extend(word.letters * abs(exp))
        return BraidWord(self.strands, tuple(letters))

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return "*".join(
            f"a({i},{j})" if e == 1 else f"a({i},{j})^{e}"
            for (i, j), e in self.letters
        )

    def __repr__(self) -> str:
        return f"PureWord({self.strands}, {str(self)!r})"


def center_z_pure_word(n: int) -> PureWord:
    """z written in the a-alphabet: a12 (a13 a23) ... (a1n ... a_{n-1,n})."""
    if n < 2:
        raise ValueError("need at least 2 strands")
    letters = [((i, j), 1) for j in range(2, n + 1) for i in range(1, j)]
    return PureWord(n, tuple(letters))


def _annular_emission(state: int, i: int, m: int) -> tuple[str, int] | None:
    """Coset rewriting table for the stabilizer of the last strand in B_m.

    Cosets are indexed by the strand position that ends at m, with shortest
    positive representatives r_p = s_{m-1} s_{m-2} ... s_p.  The entry for a
    positive letter s_i read in coset ``state`` is the subgroup element
    r_state s_i r_state'^-1, which simplifies to one of: a braid generator of
    the quotient copy of B_{m-1}, the free generator a_{i,m}, or nothing.
    """
    if i <= m - 2:
        if state == i:
            return ("free", i)
        if state == i + 1:
            return None
        if state >= i + 2:
            return ("braid", i)
        return ("braid", i - 1)
    # i == m - 1
    if state == m - 1:
        return ("free", m - 1)
    if state == m:
        return None
    return ("braid", m - 2)


def _annular_split(b: BraidWord) -> tuple[FreeWord, BraidWord]:
    """Write a pure braid on m strands as (free part, braid on m-1 strands).

    The free part is the coordinate word of the kernel component in the
    splitting off of the last strand, with x_j standing for a_{j,m}; the
    braid part is the word with the last strand forgotten.
    """
    m = b.strands
    free = FreeWord.identity(m - 1)
    braid_letters: list[tuple[int, int]] = []
    auto = artin.FreeAutomorphism.identity(m - 1)
    state = m
    for i, sign in b.letters:
        swapped = state
        if swapped == i:
            swapped = i + 1
        elif swapped == i + 1:
            swapped = i
        emit_state = state if sign == 1 else swapped
        emission = _annular_emission(emit_state, i, m)
        if emission is not None:
            kind, idx = emission
            if kind == "free":
                image = auto.images[idx - 1]
                free = free * (image if sign == 1 else image.inverse())
            else:
                braid_letters.append((idx, sign))
                auto = artin.compose(auto, artin.artin_generator(idx, m - 1, sign))
        state = swapped
    return free, BraidWord(m - 1, tuple(braid_letters))


def rewrite_pure(b: BraidWord) -> PureWord:
    """Rewrite a pure braid word into the a_{i,j} alphabet.

    Strands are split off one at a time: at each level the word is rewritten
    along the coset transversal of the subgroup fixing the last strand, which
    separates a free-group coordinate (letters a_{*,m}) from the image with
    that strand forgotten.  Expanding the result yields a braid equal to the
    input (checked by the equality oracle in the test suite), not necessarily
    the same word.
    """
    if not is_pure(b):
        raise ValueError("braid word is not pure")
    out: list[tuple[tuple[int, int], int]] = []
    current = b
    for m in range(b.strands, 1, -1):
        free, current = _annular_split(current)
        out.extend(((j, m), e) for j, e in free.letters)
    return PureWord(b.strands, tuple(out))


def p3_image(w: PureWord) -> tuple[FreeWord, int]:
    """Image of a 3-strand pure word under the splitting P_3 = F_2 x Z.

    The direct factors are generated by v1 = a13, v2 = a23 (the free part)
    and the central full twist u, with a12 mapping to (v1 v2)^-1 u.  Returns
    (free component, exponent of u).
    """
    if w.strands != 3:
        raise RankError("the direct-product splitting is for 3 strands")
    v1 = FreeWord.generator(2, 1)
    v2 = FreeWord.generator(2, 2)
    a12_free = (v1 * v2).inverse()
    free = FreeWord.identity(2)
    central = 0
    for pair, exp in w.letters:
        if pair == (1, 3):
            free = free * (v1 ** exp)
        elif pair == (2, 3):
            free = free * (v2 ** exp)
        else:  # (1, 2)
            free = free * (a12_free ** exp)
            central += exp
    return free, central


# ---------------------------------------------------------------------------
# Parsing and seeded word generation
# ---------------------------------------------------------------------------

def parse_braid_word(text: str, strands: int) -> BraidWord:
    """Parse words like ``s1*s2^-1*s1^2`` (``e`` is the identity)."""
    return BraidWord(strands, _parse_word_tokens(text, "s"))


def parse_pure_word(text: str, strands: int) -> PureWord:
    """Parse words like ``a(1,3)^-1*a(2,3)`` (``e`` is the identity)."""
    s = text.replace(" ", "")
    if s in ("", "e"):
        return PureWord(strands)
    letters: list[tuple[tuple[int, int], int]] = []
    for token in s.split("*"):
        if not token.startswith("a(") :
            raise ParseError(f"cannot parse token {token!r} in word {text!r}")
        body = token[1:]
        exp = 1
        if "^" in body:
            body, exp_text = body.split("^", 1)
            try:
                exp = int(exp_text)
            except ValueError as exc:
                raise ParseError(f"bad exponent in token {token!r}") from exc
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"cannot parse token {token!r} in word {text!r}")
        parts = body[1:-1].split(",")
        if len(parts) != 2:
            raise ParseError(f"cannot parse token {token!r} in word {text!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"cannot parse token {token!r} in word {text!r}") from exc
        letters.append(((i, j), exp))
    return PureWord(strands, tuple(letters))


def random_braid_word(strands: int, length: int, rng: random.Random) -> BraidWord:
    letters = tuple(
        (rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(strands, letters)


def random_pure_braid_word(strands: int, length: int, rng: random.Random) -> BraidWord:
    """A random pure word: a random word closed up by a permutation braid."""
    budget = max(0, length - strands * (strands - 1) // 2)
    base = random_braid_word(strands, budget, rng)
    correction = permutation_of(base).inverse().reduced_word()
    return base * BraidWord(strands, tuple((i, 1) for i in correction))


def random_equal_pair(
    strands: int, max_length: int, rng: random.Random
) -> tuple[BraidWord, BraidWord]:
    """Two words equal in the group, produced by relation-preserving rewrites."""
    u = random_braid_word(strands, rng.randint(0, max(1, max_length - 8)), rng)
    letters = list(u.letters)
    for _ in range(8):
        op = rng.randrange(3)
        if op == 0 and len(letters) + 2 <= max_length:
            pos = rng.randint(0, len(letters))
            i = rng.randint(1, strands - 1)
            sign = rng.choice((1, -1))
            letters[pos:pos] = [(i, sign), (i, -sign)]
        elif op == 1:
            spots = [
                t
                for t in range(len(letters) - 1)
                if abs(letters[t][0] - letters[t + 1][0]) >= 2
            ]
            if spots:
                t = rng.choice(spots)
                letters[t], letters[t + 1] = letters[t + 1], letters[t]
        else:
            spots = []
            for t in range(len(letters) - 2):
                (i1, e1), (i2, e2), (i3, e3) = letters[t : t + 3]
                if e1 == e2 == e3 and i1 == i3 and abs(i1 - i2) == 1:
                    spots.append(t)
            if spots:
                t = rng.choice(spots)
                (i1, e), (i2, _), _ = letters[t : t + 3]
                letters[t : t + 3] = [(i2, e), (i1, e), (i2, e)]
    return u, BraidWord(strands, tuple(letters))
