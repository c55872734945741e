"""Finite lattices and special-element classification.

A lattice is built from an order matrix or a cover list; construction
derives the join and meet tables and rejects posets where some pair
lacks a unique least upper or greatest lower bound.  Elements are
classified by exhaustive quantifier sweeps:

  modular        y <= z   implies  (x v y) ^ z = (x ^ z) v y
  lower-modular  x <= y   implies  x v (y ^ z) = y ^ (x v z)
  upper-modular  y <= x   implies  (z ^ x) v y = (z v y) ^ x
  distributive   x v (y ^ z) = (x v y) ^ (x v z)

(upper-modular is the order dual of lower-modular).  Two theorem-backed
sweeps act as bug detectors: joining a lower-modular element up into a
principal coideal preserves lower modularity, and surjective lattice
homomorphisms preserve upper modularity.  A counterexample from either
can only mean the implementation is wrong.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import Partition, UnionFind

# lattice congruences are canonical partitions compatible with join and meet
LatticeCongruence = Partition


class LatticeError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class FiniteLattice:
    size: int
    leq: tuple[tuple[bool, ...], ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    name: str = ""
    labels: tuple[str, ...] | None = None

    @property
    def bottom(self) -> int:
        return self._bound(low=True)

    @property
    def top(self) -> int:
        return self._bound(low=False)

    def _bound(self, low: bool) -> int:
        for e in range(self.size):
            if all(
                (self.leq[e][k] if low else self.leq[k][e])
                for k in range(self.size)
            ):
                return e
        raise LatticeError("no bound element; lattice invariant broken")

    def label(self, e: int) -> str:
        return self.labels[e] if self.labels else str(e)

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.size):
            for j in range(self.size):
                if i == j or not self.leq[i][j]:
                    continue
                if not any(
                    k != i and k != j and self.leq[i][k] and self.leq[k][j]
                    for k in range(self.size)
                ):
                    out.append((i, j))
        return out

    def __str__(self) -> str:
        return self.name or f"lattice of size {self.size}"


def from_order(
    order: Sequence[Sequence[bool]], name: str = "", labels: Sequence[str] | None = None
) -> FiniteLattice:
    """Validate a partial order and derive the join and meet tables."""
    n = len(order)
    if n == 0:
        raise LatticeError("empty carrier")
    leq = tuple(tuple(bool(v) for v in row) for row in order)
    if any(len(row) != n for row in leq):
        raise LatticeError("order matrix is not square")
    for i in range(n):
        if not leq[i][i]:
            raise LatticeError(f"order not reflexive at {i}")
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise LatticeError(f"order not antisymmetric at ({i},{j})")
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    raise LatticeError(f"order not transitive at ({i},{j},{k})")

    def bound(i: int, j: int, upper: bool) -> int:
        if upper:
            cands = [k for k in range(n) if leq[i][k] and leq[j][k]]
        else:
            cands = [k for k in range(n) if leq[k][i] and leq[k][j]]
        for u in cands:
            if all((leq[u][k] if upper else leq[k][u]) for k in cands):
                return u
        kind = "least upper" if upper else "greatest lower"
        raise LatticeError(f"pair ({i},{j}) has no {kind} bound")

    join = tuple(tuple(bound(i, j, True) for j in range(n)) for i in range(n))
    meet = tuple(tuple(bound(i, j, False) for j in range(n)) for i in range(n))
    return FiniteLattice(n, leq, join, meet, name=name, labels=tuple(labels) if labels else None)


def from_covers(
    n: int,
    covers: Iterable[tuple[int, int]],
    name: str = "",
    labels: Sequence[str] | None = None,
) -> FiniteLattice:
    """Build from cover pairs (i, j) meaning i < j; closure is computed here."""
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i, j in covers:
        if not (0 <= i < n and 0 <= j < n):
            raise LatticeError(f"cover ({i},{j}) out of range")
        leq[i][j] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return from_order(leq, name=name, labels=labels)


def dual(lat: FiniteLattice) -> FiniteLattice:
    transposed = tuple(tuple(lat.leq[j][i] for j in range(lat.size)) for i in range(lat.size))
    return from_order(transposed, name=f"dual({lat.name})" if lat.name else "", labels=lat.labels)


# --- catalog ------------------------------------------------------------------


def chain(n: int) -> FiniteLattice:
    if n < 1:
        raise LatticeError("chains need at least one element")
    order = [[i <= j for j in range(n)] for i in range(n)]
    return from_order(order, name=f"chain({n})")


def boolean(k: int) -> FiniteLattice:
    """Lattice of subsets of a k-set, elements encoded as bitmasks."""
    if k < 0:
        raise LatticeError("boolean(k) needs k >= 0")
    n = 1 << k
    order = [[(i & j) == i for j in range(n)] for i in range(n)]
    labels = [format(i, f"0{max(k, 1)}b") for i in range(n)]
    return from_order(order, name=f"boolean({k})", labels=labels)


def m3() -> FiniteLattice:
    covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    return from_covers(5, covers, name="M3", labels=["0", "a", "b", "c", "1"])


def n5() -> FiniteLattice:
    # 0 < a < b < 1 on one side, 0 < c < 1 on the other
    covers = [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]
    return from_covers(5, covers, name="N5", labels=["0", "a", "b", "c", "1"])


def product(a: FiniteLattice, b: FiniteLattice) -> FiniteLattice:
    n = a.size * b.size
    order = [
        [
            a.leq[i1][j1] and b.leq[i2][j2]
            for j1 in range(a.size)
            for j2 in range(b.size)
        ]
        for i1 in range(a.size)
        for i2 in range(b.size)
    ]
    labels = [
        f"({a.label(i1)},{b.label(i2)})"
        for i1 in range(a.size)
        for i2 in range(b.size)
    ]
    return from_order(order, name=f"{a.name or 'A'} x {b.name or 'B'}", labels=labels)


_CAT_RE = re.compile(r"^(chain|boolean)\((\d+)\)$")


def catalog(name: str) -> FiniteLattice:
    """Named lattices: chain(n), boolean(k), M3, N5, product(a,b)."""
    text = name.replace(" ", "")
    if text == "M3":
        return m3()
    if text == "N5":
        return n5()
    m = _CAT_RE.match(text)
    if m:
        arg = int(m.group(2))
        return chain(arg) if m.group(1) == "chain" else boolean(arg)
    if text.startswith("product(") and text.endswith(")"):
        inner = text[len("product(") : -1]
        depth = 0
        for pos, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return product(catalog(inner[:pos]), catalog(inner[pos + 1 :]))
        raise LatticeError(f"cannot split product arguments in {name!r}")
    raise LatticeError(f"unknown catalog lattice {name!r}")


# --- element classification ----------------------------------------------------


@dataclass(frozen=True)
class ElementClassification:
    modular: bool
    lower_modular: bool
    upper_modular: bool
    distributive: bool


def classify_element(lat: FiniteLattice, x: int) -> ElementClassification:
    n, join, meet, leq = lat.size, lat.join, lat.meet, lat.leq
    modular = True
    for y in range(n):
        for z in range(n):
            if leq[y][z] and meet[join[x][y]][z] != join[meet[x][z]][y]:
                modular = False
                break
        if not modular:
            break
    lower = all(
        join[x][meet[y][z]] == meet[y][join[x][z]]
        for y in range(n)
        if leq[x][y]
        for z in range(n)
    )
    upper = all(
        join[meet[z][x]][y] == meet[join[z][y]][x]
        for y in range(n)
        if leq[y][x]
        for z in range(n)
    )
    distributive = all(
        join[x][meet[y][z]] == meet[join[x][y]][join[x][z]]
        for y in range(n)
        for z in range(n)
    )
    return ElementClassification(modular, lower, upper, distributive)


def classify_all(lat: FiniteLattice) -> list[ElementClassification]:
    return [classify_element(lat, x) for x in range(lat.size)]


def principal_coideal(lat: FiniteLattice, a: int) -> tuple[FiniteLattice, tuple[int, ...]]:
    """The sublattice of elements above a, with the embedding into lat."""
    members = tuple(e for e in range(lat.size) if lat.leq[a][e])
    order = [[lat.leq[i][j] for j in members] for i in members]
    labels = [lat.label(e) for e in members]
    sub = from_order(order, name=f"[{lat.label(a)}) in {lat}", labels=labels)
    return sub, members


def is_zero_distributive(lat: FiniteLattice) -> tuple[bool, tuple[int, int, int] | None]:
    """x ^ z = y ^ z = 0 must force (x v y) ^ z = 0."""
    zero = lat.bottom
    n = lat.size
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if (
                    lat.meet[x][z] == zero
                    and lat.meet[y][z] == zero
                    and lat.meet[lat.join[x][y]][z] != zero
                ):
                    return False, (x, y, z)
    return True, None


def check_lower_modular_lift(
    lat: FiniteLattice,
) -> tuple[bool, tuple[int, int] | None]:
    """Lower-modular x forces x v a lower-modular in the coideal above a.

    This holds in every lattice; a counterexample (x, a) means a bug.
    """
    lower_flags = [classify_element(lat, x).lower_modular for x in range(lat.size)]
    for a in range(lat.size):
        sub, members = principal_coideal(lat, a)
        back = {e: i for i, e in enumerate(members)}
        for x in range(lat.size):
            if not lower_flags[x]:
                continue
            lifted = back[lat.join[x][a]]
            if not classify_element(sub, lifted).lower_modular:
                return False, (x, a)
    return True, None


# --- congruences and quotients ---------------------------------------------------


def principal_lattice_congruence(lat: FiniteLattice, a: int, b: int) -> LatticeCongruence:
    uf = UnionFind(lat.size)
    queue = [(a, b)]
    while queue:
        i, j = queue.pop()
        if uf.union(i, j):
            for w in range(lat.size):
                queue.append((lat.join[i][w], lat.join[j][w]))
                queue.append((lat.meet[i][w], lat.meet[j][w]))
    return LatticeCongruence.from_labels(uf.labels())


def is_lattice_congruence(lat: FiniteLattice, part: Partition) -> bool:
    if part.size != lat.size:
        raise ValueError("partition size does not match the lattice")
    for cls in part.classes():
        rep = cls[0]
        for other in cls[1:]:
            for w in range(lat.size):
                if not part.related(lat.join[rep][w], lat.join[other][w]):
                    return False
                if not part.related(lat.meet[rep][w], lat.meet[other][w]):
                    return False
    return True


def enumerate_lattice_congruences(
    lat: FiniteLattice, budget: int = 100_000
) -> list[LatticeCongruence]:
    """All congruences, generated as joins of principal ones."""
    n = lat.size
    principals = {
        principal_lattice_congruence(lat, a, b)
        for a in range(n)
        for b in range(a + 1, n)
    }
    seen = {LatticeCongruence.discrete(n)} | principals
    frontier = list(principals)
    while frontier:
        nxt = []
        for theta in frontier:
            for p in principals:
                joined = theta.join(p)
                if joined not in seen:
                    seen.add(joined)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"more than {budget} congruences")
                    nxt.append(joined)
        frontier = nxt
    return sorted(seen, key=lambda c: (-c.num_classes, c.class_of))


def quotient(
    lat: FiniteLattice, theta: LatticeCongruence
) -> tuple[FiniteLattice, tuple[int, ...]]:
    """Quotient lattice and the canonical surjection (element -> class id)."""
    classes = theta.classes()
    reps = [cls[0] for cls in classes]
    k = len(reps)
    # [a] <= [b] iff a ^ b lies in the class of a; well-defined for congruences
    order = [
        [theta.related(lat.meet[reps[i]][reps[j]], reps[i]) for j in range(k)]
        for i in range(k)
    ]
    labels = ["{" + ",".join(lat.label(e) for e in cls) + "}" for cls in classes]
    q = from_order(order, name=f"{lat}/theta", labels=labels)
    return q, theta.class_of


def check_upper_modular_preservation(
    lat: FiniteLattice, budget: int = 100_000
) -> tuple[bool, tuple[LatticeCongruence, int] | None]:
    """Surjections preserve upper-modular elements; violations mean bugs."""
    upper_flags = [classify_element(lat, x).upper_modular for x in range(lat.size)]
    for theta in enumerate_lattice_congruences(lat, budget=budget):
        q, surj = quotient(lat, theta)
        for x in range(lat.size):
            if upper_flags[x] and not classify_element(q, surj[x]).upper_modular:
                return False, (theta, x)
    return True, None


# --- file format ------------------------------------------------------------------


def parse_lattice_lines(lines: Iterable[str], name: str = "") -> FiniteLattice:
    """Format: first line "n <size>", then cover lines "i < j" (0-based)."""
    body = [ln.split("#", 1)[0].strip() for ln in lines]
    body = [ln for ln in body if ln]
    if not body or not body[0].startswith("n "):
        raise LatticeError('lattice files start with a line "n <size>"')
    n = int(body[0][2:])
    covers = []
    for ln in body[1:]:
        m = re.fullmatch(r"(\d+)\s*<\s*(\d+)", ln)
        if not m:
            raise LatticeError(f"bad cover line {ln!r}")
        covers.append((int(m.group(1)), int(m.group(2))))
    return from_covers(n, covers, name=name)
