"""Words over the free semigroup on a countable alphabet.

A word is a non-empty finite sequence of letters; a letter is a positive
integer index (x1, x2, ...).  Text I/O renders letter i as the i-th
lowercase ASCII character, so ``"aab"`` is x1 x1 x2.  There is no empty
word: the constructors enforce length >= 1 throughout.

Everything here is immutable and pure, so values can be shared freely
between threads.
"""

from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping

# Desk-scale caps for the factor-instance search, which is exponential in
# the worst case.  Both can be widened per call.
MAX_PATTERN_LEN = 8
MAX_INSTANCE_WORD_LEN = 24


@dataclass(frozen=True, order=True)
class Word:
    """Immutable sequence of positive letter indices."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("the free semigroup has no empty word")
        if any(not isinstance(x, int) or x < 1 for x in self.letters):
            raise ValueError(f"letters must be positive integers: {self.letters!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k < 1:
            raise ValueError("powers of words need exponent >= 1")
        return Word(self.letters * k)

    def __str__(self) -> str:
        return render_word(self)

    def factor(self, start: int, end: int) -> "Word":
        if not (0 <= start < end <= len(self.letters)):
            raise ValueError(f"bad factor range [{start}:{end}]")
        return Word(self.letters[start:end])


def word(text: str) -> Word:
    """Parse the lowercase text syntax: 'a'..'z' map to x1..x26."""
    letters = []
    for ch in text:
        idx = string.ascii_lowercase.find(ch)
        if idx < 0:
            raise ValueError(f"bad letter {ch!r} in word {text!r} (use a-z)")
        letters.append(idx + 1)
    return Word(tuple(letters))


def letter(i: int) -> Word:
    return Word((i,))


def render_word(w: Word) -> str:
    parts = []
    for x in w.letters:
        if x <= 26:
            parts.append(string.ascii_lowercase[x - 1])
        else:
            parts.append(f"[{x}]")
    return "".join(parts)


def content(w: Word) -> frozenset[int]:
    """The set of letters occurring in w."""
    return frozenset(w.letters)


def occurrences(w: Word, x: int) -> int:
    return w.letters.count(x)


def letter_counts(w: Word) -> Counter:
    return Counter(w.letters)


def first_letter(w: Word) -> int:
    return w.letters[0]


def last_letter(w: Word) -> int:
    return w.letters[-1]


def is_balanced(u: Word, v: Word) -> bool:
    """True iff every letter occurs equally often in u and v."""
    return Counter(u.letters) == Counter(v.letters)


@dataclass(frozen=True)
class PartitionLambda:
    """Non-increasing multiplicity vector of a word (a number partition).

    ``parts`` lists positive multiplicities sorted non-increasingly; ``m``
    is the number of parts and ``n`` their sum.  Word invariants allow a
    single part; the word G-set construction additionally requires m >= 2.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a partition has at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError("partition parts are positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be non-increasing: {self.parts}")

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partition_of(w: Word) -> PartitionLambda:
    """Multiset of letter multiplicities of w, sorted non-increasingly."""
    return PartitionLambda(tuple(sorted(letter_counts(w).values(), reverse=True)))


# --- substitutions and permutations ---------------------------------------

Substitution = Mapping[int, Word]


def apply_substitution(w: Word, subst: Substitution) -> Word:
    """Image of w under the endomorphism sending letter x to subst[x].

    Letters outside the support are fixed.  Images are words, hence
    non-empty, so the result is at least as long as w.
    """
    out: list[int] = []
    for x in w.letters:
        img = subst.get(x)
        if img is None:
            out.append(x)
        else:
            out.extend(img.letters)
    return Word(tuple(out))


def compose_substitutions(outer: Substitution, inner: Substitution) -> dict[int, Word]:
    """Substitution t.s with (t.s)(x) = t(s(x)); support is the union."""
    comp = {x: apply_substitution(img, outer) for x, img in inner.items()}
    for x, img in outer.items():
        comp.setdefault(x, img)
    return comp


def apply_permutation(w: Word, perm: Mapping[int, int]) -> Word:
    """Relabel w letter-wise through a bijection on a finite letter set."""
    if len(set(perm.values())) != len(perm):
        raise ValueError("permutation is not injective on its domain")
    if set(perm.values()) != set(perm.keys()):
        raise ValueError("permutation must map its domain onto itself")
    try:
        return Word(tuple(perm[x] for x in w.letters))
    except KeyError as exc:
        raise ValueError(f"letter x{exc.args[0]} outside permutation domain") from None


# --- factor-instance matching ----------------------------------------------


def match_at(
    w: Word, start: int, pattern: Word, max_image_len: int | None = None
) -> Iterator[tuple[int, dict[int, Word]]]:
    """All ways a substitution instance of ``pattern`` sits in w at ``start``.

    Yields (end, subst) with apply_substitution(pattern, subst) equal to
    the factor w[start:end].  Images are non-empty factors of w; when
    ``max_image_len`` is given, longer images are pruned.  Backtracking,
    exponential in the worst case.
    """
    letters = w.letters
    n = len(letters)
    pat = pattern.letters

    def extend(k: int, pos: int, subst: dict[int, Word]) -> Iterator[tuple[int, dict[int, Word]]]:
        if k == len(pat):
            yield pos, dict(subst)
            return
        x = pat[k]
        bound = subst.get(x)
        if bound is not None:
            end = pos + len(bound)
            if end <= n and letters[pos:end] == bound.letters:
                yield from extend(k + 1, end, subst)
            return
        limit = n if max_image_len is None else min(n, pos + max_image_len)
        for end in range(pos + 1, limit + 1):
            subst[x] = Word(letters[pos:end])
            yield from extend(k + 1, end, subst)
            del subst[x]

    if start < n:
        yield from extend(0, start, {})


def contains_instance(
    w: Word,
    pattern: Word,
    *,
    max_word_len: int = MAX_INSTANCE_WORD_LEN,
    max_pattern_len: int = MAX_PATTERN_LEN,
) -> bool:
    """True iff some factor of w is a substitution instance of pattern.

    Substitution images are non-empty, so e.g. "abab" contains an instance
    of the square pattern "aa" (via a -> ab) while "aba" does not.
    """
    if len(pattern) > max_pattern_len:
        raise ValueError(f"pattern longer than the cap {max_pattern_len}")
    if len(w) > max_word_len:
        raise ValueError(f"word longer than the cap {max_word_len}")
    if len(pattern) > len(w):
        return False
    for start in range(len(w)):
        for _end, _subst in match_at(w, start, pattern):
            return True
    return False
