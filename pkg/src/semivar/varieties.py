"""Decision procedures for "identity u = v holds in variety V".

Supported varieties and their word criteria:

  T       trivial variety: every identity holds.
  SL      semilattices: same content on both sides.
  LZ, RZ  left / right zero semigroups: same first / last letter.
  COM     commutative semigroups: balanced (same letter multiplicities).
  C(m)    var{x^m = x^(m+1), xy = yx}: per letter, multiplicities equal
          or both at least m.  C(0) is T and C(1) is SL.
  P       var{xy = x2y, x2y2 = y2x2}: same content, and the last-letter
          multiplicities are both > 1 or are both 1 with equal last
          letters.
  P_rev   var{xy = xy2, x2y2 = y2x2}: the mirror criterion on first
          letters.
  ZR(W)   zero-reduced variety var{w = 0 : w in W}: a word is null iff
          it contains a factor that is a substitution instance of some
          w in W; u = v holds iff u and v are literally equal or both
          null.  This is the only family here that supports w = 0
          queries.

Every criterion is a kernel-invariant comparison, hence an equivalence
on words that is stable under substitution and two-sided context; the
test-suite re-derives this from independently computed keys.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .words import (
    Word,
    content,
    contains_instance,
    first_letter,
    is_balanced,
    last_letter,
    letter_counts,
    render_word,
    word,
)


@dataclass(frozen=True)
class Equation:
    lhs: Word
    rhs: Word

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        return f"{render_word(self.lhs)} = {render_word(self.rhs)}"


@dataclass(frozen=True)
class ZeroIdentity:
    """The symbolic identity w = 0, shorthand for the pair wx = xw = w."""

    body: Word

    def __str__(self) -> str:
        return f"{render_word(self.body)} = 0"


Identity = Equation | ZeroIdentity


class UnsupportedQueryError(ValueError):
    """A query the installed criteria do not characterize."""


@dataclass(frozen=True)
class Variety:
    kind: str
    m: int = 0
    patterns: frozenset[Word] = field(default_factory=frozenset)

    def __str__(self) -> str:
        if self.kind == "Cm":
            return f"C{self.m}"
        if self.kind == "ZR":
            inside = ",".join(sorted(render_word(p) for p in self.patterns))
            return f"ZR{{{inside}}}"
        return self.kind


T = Variety("T")
SL = Variety("SL")
LZ = Variety("LZ")
RZ = Variety("RZ")
COM = Variety("COM")
P = Variety("P")
PREV = Variety("Prev")


def cm(m: int) -> Variety:
    """The commutative variety C(m); C(0) and C(1) collapse to T and SL."""
    if m < 0:
        raise ValueError("C(m) needs m >= 0")
    if m == 0:
        return T
    if m == 1:
        return SL
    return Variety("Cm", m=m)


def zero_reduced(patterns: Iterable[Word]) -> Variety:
    pats = frozenset(patterns)
    if not pats:
        raise ValueError("a zero-reduced variety needs at least one pattern")
    return Variety("ZR", patterns=pats)


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    reason: str

    def __bool__(self) -> bool:
        return self.holds


def _is_null(v: Variety, w: Word) -> bool:
    return any(contains_instance(w, p) for p in v.patterns)


def _lname(x: int) -> str:
    return render_word(Word((x,)))


def holds(v: Variety, ident: Identity) -> CheckResult:
    """Decide whether the identity holds in v, with the deciding clause."""
    if isinstance(ident, ZeroIdentity):
        if v.kind != "ZR":
            raise UnsupportedQueryError(
                f"w = 0 queries are only decidable here for zero-reduced "
                f"varieties, not {v}"
            )
        if _is_null(v, ident.body):
            return CheckResult(True, "body contains an instance of a null pattern")
        return CheckResult(False, "body avoids every null pattern")

    u, w = ident.lhs, ident.rhs
    if v.kind == "T":
        return CheckResult(True, "trivial variety")

    if v.kind == "RZ":
        if last_letter(u) == last_letter(w):
            return CheckResult(True, f"last letters agree ({_lname(last_letter(u))})")
        return CheckResult(False, "last letters differ")

    if v.kind == "LZ":
        if first_letter(u) == first_letter(w):
            return CheckResult(True, "first letters agree")
        return CheckResult(False, "first letters differ")

    if v.kind == "COM":
        if is_balanced(u, w):
            return CheckResult(True, "both sides are balanced")
        return CheckResult(False, "letter multiplicities differ")

    if v.kind in ("SL", "Cm"):
        m = 1 if v.kind == "SL" else v.m
        cu, cw = letter_counts(u), letter_counts(w)
        for x in set(cu) | set(cw):
            a, b = cu[x], cw[x]
            if a != b and not (a >= m and b >= m):
                side = "lhs" if a < b else "rhs"
                return CheckResult(
                    False,
                    f"letter {_lname(x)} occurs {min(a, b)} time(s) on the "
                    f"{side}, {max(a, b)} on the other (threshold {m})",
                )
        return CheckResult(True, f"all multiplicities equal or both >= {m}")

    if v.kind in ("P", "Prev"):
        if content(u) != content(w):
            return CheckResult(False, "content sets differ")
        if v.kind == "P":
            xu, xw = last_letter(u), last_letter(w)
            where = "last"
        else:
            xu, xw = first_letter(u), first_letter(w)
            where = "first"
        nu, nw = u.letters.count(xu), w.letters.count(xw)
        if nu > 1 and nw > 1:
            return CheckResult(True, f"{where}-letter multiplicity > 1 on both sides")
        if nu == 1 and nw == 1 and xu == xw:
            return CheckResult(True, f"{where} letters agree and occur once")
        return CheckResult(False, f"{where}-letter clause fails")

    if v.kind == "ZR":
        if u == w:
            return CheckResult(True, "sides literally equal")
        if _is_null(v, u) and _is_null(v, w):
            return CheckResult(True, "both sides contain null-pattern instances")
        return CheckResult(False, "sides differ and are not both null")

    raise ValueError(f"unknown variety kind {v.kind!r}")


def holds_in_join(varieties: Iterable[Variety], ident: Identity) -> bool:
    """An identity holds in a join of varieties iff it holds in each one."""
    return all(holds(v, ident).holds for v in varieties)


def all_words(max_len: int, n_letters: int) -> Iterator[Word]:
    """All words of length 1..max_len over the letters x1..x_{n_letters}."""
    alphabet = range(1, n_letters + 1)
    for length in range(1, max_len + 1):
        for tup in itertools.product(alphabet, repeat=length):
            yield Word(tup)


def join_contains_p_scan(
    max_len: int, max_letters: int
) -> tuple[bool, Equation | None]:
    """Exhaustively test that identities of C2 and RZ jointly entail P.

    Scans every equation over the bounded word set; returns the first
    equation that holds in both C2 and RZ but fails in P, if any.
    """
    if max_len < 1 or max_letters < 1:
        raise ValueError("scan bounds must be >= 1")
    c2 = cm(2)
    pool = list(all_words(max_len, max_letters))
    for u in pool:
        for v in pool:
            eq = Equation(u, v)
            if holds(c2, eq).holds and holds(RZ, eq).holds and not holds(P, eq).holds:
                return False, eq
    return True, None


# --- text formats -----------------------------------------------------------

_ID_RE = re.compile(r"^\s*([a-z]+)\s*=\s*([a-z]+|0)\s*$")


def parse_identity(text: str) -> Identity:
    """Parse "u = v" or "w = 0" in the lowercase word syntax."""
    m = _ID_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse identity {text!r} (expected 'u = v' or 'w = 0')")
    lhs, rhs = m.group(1), m.group(2)
    if rhs == "0":
        return ZeroIdentity(word(lhs))
    return Equation(word(lhs), word(rhs))


def parse_identity_lines(lines: Iterable[str]) -> list[Identity]:
    """One identity per line; '#' starts a comment; blank lines ignored."""
    out: list[Identity] = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            out.append(parse_identity(text))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out


def parse_variety(name: str, patterns: Iterable[Word] = ()) -> Variety:
    """Parse a variety name as used by the CLI ("P", "C2", "ZR", ...)."""
    key = name.strip()
    fixed = {"T": T, "SL": SL, "LZ": LZ, "RZ": RZ, "COM": COM, "P": P, "Prev": PREV}
    if key in fixed:
        return fixed[key]
    m = re.fullmatch(r"C(\d+)", key)
    if m:
        return cm(int(m.group(1)))
    if key == "ZR":
        return zero_reduced(patterns)
    raise ValueError(f"unknown variety {name!r}")
