"""Partitions of {0..n-1} with lattice operations, canonically labelled.

Shared by the G-set and lattice congruence code.  A partition is stored
as a class-id per element, with ids assigned in order of first
occurrence, so equal partitions compare equal as tuples.  Joins are
transitive closures of unions (which preserve compatibility with any
algebraic operations), meets are common refinements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        self.parent[rj] = ri
        return True

    def labels(self) -> list[int]:
        return [self.find(i) for i in range(len(self.parent))]


def _canonical(labels: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for l in labels:
        if l not in relabel:
            relabel[l] = len(relabel)
        out.append(relabel[l])
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    class_of: tuple[int, ...]

    @staticmethod
    def from_labels(labels: Sequence[int]) -> "Partition":
        return Partition(_canonical(labels))

    @staticmethod
    def discrete(n: int) -> "Partition":
        return Partition(tuple(range(n)))

    @staticmethod
    def full(n: int) -> "Partition":
        return Partition((0,) * n)

    @staticmethod
    def from_classes(n: int, classes: Iterable[Iterable[int]]) -> "Partition":
        """Partition with the given pairwise-disjoint non-singleton classes."""
        labels = list(range(n, 2 * n))
        next_label = 0
        for cls in classes:
            for i in cls:
                if labels[i] < n:
                    raise ValueError(f"element {i} appears in two classes")
                labels[i] = next_label
            next_label += 1
        return Partition.from_labels(labels)

    @property
    def size(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def related(self, i: int, j: int) -> bool:
        return self.class_of[i] == self.class_of[j]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for i, c in enumerate(self.class_of):
            out[c].append(i)
        return out

    def nontrivial_classes(self) -> list[list[int]]:
        return [c for c in self.classes() if len(c) > 1]

    def refines(self, other: "Partition") -> bool:
        seen: dict[int, int] = {}
        for i, c in enumerate(self.class_of):
            o = other.class_of[i]
            if seen.setdefault(c, o) != o:
                return False
        return True

    def join(self, other: "Partition") -> "Partition":
        uf = UnionFind(self.size)
        for part in (self, other):
            reps: dict[int, int] = {}
            for i, c in enumerate(part.class_of):
                if c in reps:
                    uf.union(reps[c], i)
                else:
                    reps[c] = i
        return Partition.from_labels(uf.labels())

    def meet(self, other: "Partition") -> "Partition":
        pair_label: dict[tuple[int, int], int] = {}
        labels = []
        for a, b in zip(self.class_of, other.class_of):
            labels.append(pair_label.setdefault((a, b), len(pair_label)))
        return Partition(tuple(labels))


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of an n-set as restricted growth strings."""
    labels = [0] * n

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for c in range(used):
            labels[i] = c
            yield from rec(i + 1, used)
        labels[i] = used
        yield from rec(i + 1, used + 1)

    if n:
        yield from rec(0, 0)
