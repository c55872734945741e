"""Finite semigroups given by Cayley tables, used as refutation oracles.

A table is validated for associativity at construction.  Satisfaction of
an identity is decided by exhausting all assignments of elements to the
letters involved; a failed identity always comes with a refuting
assignment.  A refutation in a model of a variety's axioms is conclusive
for the variety; satisfaction in a single model is not.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .varieties import Identity, ZeroIdentity
from .words import Word


class TableError(ValueError):
    """The given table is not a semigroup."""


@dataclass(frozen=True)
class FiniteSemigroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    name: str = ""
    zero: int | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def evaluate(self, w: Word, assignment: dict[int, int]) -> int:
        val = assignment[w.letters[0]]
        for x in w.letters[1:]:
            val = self.table[val][assignment[x]]
        return val

    def __str__(self) -> str:
        return self.name or f"semigroup of order {self.order}"


def _find_zero(table: Sequence[Sequence[int]]) -> int | None:
    n = len(table)
    for z in range(n):
        if all(table[z][x] == z and table[x][z] == z for x in range(n)):
            return z
    return None


def validate(table: Sequence[Sequence[int]], name: str = "") -> FiniteSemigroup:
    """Check shape, range and associativity; returns the semigroup."""
    n = len(table)
    if n == 0:
        raise TableError("empty table")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise TableError(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise TableError(f"entry ({i},{j}) = {v} out of range 0..{n - 1}")
        rows.append(tuple(row))
    tab = tuple(rows)
    for a, b, c in itertools.product(range(n), repeat=3):
        if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
            raise TableError(f"not associative at triple ({a},{b},{c})")
    return FiniteSemigroup(n, tab, name=name, zero=_find_zero(tab))


def satisfies(
    s: FiniteSemigroup, ident: Identity
) -> tuple[bool, dict[int, int] | None]:
    """Exhaustive check; on failure returns a refuting assignment.

    A zero identity w = 0 is meaningful only when the semigroup has an
    absorbing element; it holds iff every assignment sends w there.
    """
    if isinstance(ident, ZeroIdentity):
        if s.zero is None:
            raise ValueError(f"{s} has no zero element; w = 0 is undefined on it")
        letters = sorted(set(ident.body.letters))
        for values in itertools.product(range(s.order), repeat=len(letters)):
            assignment = dict(zip(letters, values))
            if s.evaluate(ident.body, assignment) != s.zero:
                return False, assignment
        return True, None

    letters = sorted(set(ident.lhs.letters) | set(ident.rhs.letters))
    for values in itertools.product(range(s.order), repeat=len(letters)):
        assignment = dict(zip(letters, values))
        if s.evaluate(ident.lhs, assignment) != s.evaluate(ident.rhs, assignment):
            return False, assignment
    return True, None


def direct_product(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; element (i, j) is encoded as i*|t| + j."""
    n = s.order * t.order
    table = tuple(
        tuple(
            s.table[a1][b1] * t.order + t.table[a2][b2]
            for b1 in range(s.order)
            for b2 in range(t.order)
        )
        for a1 in range(s.order)
        for a2 in range(t.order)
    )
    name = f"{s.name or 'S'} x {t.name or 'T'}"
    return FiniteSemigroup(n, table, name=name, zero=_find_zero(table))


def left_zero(n: int = 2) -> FiniteSemigroup:
    return validate([[i] * n for i in range(n)], name=f"LZ{n}")


def right_zero(n: int = 2) -> FiniteSemigroup:
    return validate([list(range(n)) for _ in range(n)], name=f"RZ{n}")


def semilattice2() -> FiniteSemigroup:
    return validate([[0, 0], [0, 1]], name="SL2")


def cyclic_group(r: int) -> FiniteSemigroup:
    if r < 1:
        raise ValueError("cyclic group order must be >= 1")
    return validate([[(i + j) % r for j in range(r)] for i in range(r)], name=f"Z{r}")


def cyclic_monoid(m: int) -> FiniteSemigroup:
    """The monoid {1, a, ..., a^m} with a^(m+1) = a^m; element k is a^k."""
    if m < 0:
        raise ValueError("cyclic monoid parameter must be >= 0")
    table = [[min(i + j, m) for j in range(m + 1)] for i in range(m + 1)]
    return validate(table, name=f"CyclicMonoid({m})")


def nil2() -> FiniteSemigroup:
    """Two-element null semigroup {a, 0} with every product zero."""
    return validate([[1, 1], [1, 1]], name="NilN2")


_BUILTIN_RE = re.compile(r"^(Zr|CyclicMonoid)\((\d+)\)$")


def builtin(name: str) -> FiniteSemigroup:
    """Look up a named table: LZ2, RZ2, SL2, Zr(r), CyclicMonoid(m), NilN2."""
    fixed = {
        "LZ2": left_zero,
        "RZ2": right_zero,
        "SL2": semilattice2,
        "NilN2": nil2,
    }
    if name in fixed:
        return fixed[name]()
    m = _BUILTIN_RE.match(name)
    if m:
        arg = int(m.group(2))
        return cyclic_group(arg) if m.group(1) == "Zr" else cyclic_monoid(arg)
    raise ValueError(f"unknown builtin semigroup {name!r}")


def parse_cayley_lines(lines: Iterable[str], name: str = "") -> FiniteSemigroup:
    """Cayley table file: order line, n rows of n indices, optional "zero: k"."""
    body = [ln.split("#", 1)[0].strip() for ln in lines]
    body = [ln for ln in body if ln]
    if not body:
        raise TableError("empty table file")
    try:
        n = int(body[0])
    except ValueError:
        raise TableError(f"first line must be the order, got {body[0]!r}") from None
    declared_zero: int | None = None
    rows: list[list[int]] = []
    for ln in body[1:]:
        if ln.startswith("zero:"):
            declared_zero = int(ln.split(":", 1)[1])
            continue
        rows.append([int(tok) for tok in ln.split()])
    if len(rows) != n:
        raise TableError(f"expected {n} rows, got {len(rows)}")
    s = validate(rows, name=name)
    if declared_zero is not None and s.zero != declared_zero:
        raise TableError(
            f"declared zero {declared_zero} is not absorbing (found {s.zero})"
        )
    return s
