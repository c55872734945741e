"""Anagram G-sets of words and their congruence lattices.

For a number partition lam = (l1 >= ... >= lm) the carrier is the set of
all words using exactly the letters x1..xm with those multiplicities (an
anagram class, of multinomial size).  The letter permutations that fix
the multiplicity vector act on the carrier; a congruence is an
equivalence invariant under that action.  Congruences form a lattice
under refinement, with joins computed as transitive closures and meets
as common refinements.

The replay entry point takes a non-trivial balanced identity u = v whose
multiplicities strictly decrease and stay above 1, adjoins two fresh
letters x and y, and examines three hand-built congruences on the
anagram carrier of xyu:

  tail_swap       {xyu, xyv} and {yxu, yxv}
  second_to_end   {xyu, xuy}, {xyv, xvy}, {yxu, yux}, {yxv, yvx}
  first_to_end    {xyu, yux}, {xyv, yvx}, {yxu, xuy}, {yxv, xvy}

together with the invariant congruence generated by exchanging u and v
in all four letter arrangements.  It verifies the congruence properties,
the membership chain linking xuy to xvy, and a modular-law instance, and
reports which of the conditional conclusions follow.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .partitions import Partition, UnionFind, set_partitions
from .words import (
    PartitionLambda,
    Word,
    apply_permutation,
    content,
    is_balanced,
    letter,
    letter_counts,
    partition_of,
    render_word,
)

CARRIER_CAP = 10**6
MAX_ENUM_CARRIER = 12
BELL_ENUM_CARRIER = 9


class CarrierTooLarge(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class ReplayError(ValueError):
    """The identity does not have the shape the replay needs."""


def _multiset_perms(counts: dict[int, int], total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for x in sorted(counts):
        if counts[x]:
            counts[x] -= 1
            for rest in _multiset_perms(counts, total - 1):
                yield (x,) + rest
            counts[x] += 1


def _lambda_stabilizer(parts: Sequence[int]) -> list[dict[int, int]]:
    # letters with equal multiplicities may be permuted among each other
    blocks: dict[int, list[int]] = {}
    for i, p in enumerate(parts, start=1):
        blocks.setdefault(p, []).append(i)
    block_list = list(blocks.values())
    perms = []
    for images in itertools.product(*(itertools.permutations(b) for b in block_list)):
        perm: dict[int, int] = {}
        for block, img in zip(block_list, images):
            perm.update(zip(block, img))
        perms.append(perm)
    return perms


@dataclass
class GSet:
    lam: PartitionLambda
    carrier: tuple[Word, ...]
    letter_perms: tuple[dict[int, int], ...]
    carrier_perms: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        self.index = {w: i for i, w in enumerate(self.carrier)}

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def group_order(self) -> int:
        return len(self.carrier_perms)

    def index_of(self, w: Word) -> int:
        try:
            return self.index[w]
        except KeyError:
            raise ValueError(f"{render_word(w)} is not in this carrier") from None


def carrier_size(lam: PartitionLambda) -> int:
    size = math.factorial(lam.n)
    for p in lam.parts:
        size //= math.factorial(p)
    return size


def build_word_gset(lam: PartitionLambda, cap: int = CARRIER_CAP) -> GSet:
    """The anagram carrier of x1^l1 ... xm^lm with its stabilizer action."""
    if lam.m < 2:
        raise ValueError("the word G-set needs at least two distinct letters")
    expected = carrier_size(lam)
    if expected > cap:
        raise CarrierTooLarge(f"carrier would have {expected} words (cap {cap})")
    counts = {i: p for i, p in enumerate(lam.parts, start=1)}
    carrier = tuple(Word(t) for t in _multiset_perms(counts, lam.n))
    assert len(carrier) == expected
    index = {w: i for i, w in enumerate(carrier)}
    letter_perms = tuple(_lambda_stabilizer(lam.parts))
    carrier_perms = tuple(
        tuple(index[apply_permutation(w, perm)] for w in carrier)
        for perm in letter_perms
    )
    return GSet(lam, carrier, letter_perms, carrier_perms)


# --- invariant equivalences ---------------------------------------------------

# congruences of a G-set are plain canonical partitions of the carrier
GCongruence = Partition


def is_congruence(gset: GSet, partition: GCongruence) -> bool:
    """Invariance of the partition under every unary operation."""
    if partition.size != gset.size:
        raise ValueError("partition size does not match the carrier")
    for perm in gset.carrier_perms:
        for cls in partition.classes():
            targets = {partition.class_of[perm[i]] for i in cls}
            if len(targets) > 1:
                return False
    return True


def congruence_from_pairs(
    gset: GSet, pairs: Iterable[tuple[Word, Word]]
) -> GCongruence:
    """Least equivalence containing the pairs and closed under the action."""
    uf = UnionFind(gset.size)
    queue = [(gset.index_of(a), gset.index_of(b)) for a, b in pairs]
    while queue:
        i, j = queue.pop()
        if uf.union(i, j):
            for perm in gset.carrier_perms:
                queue.append((perm[i], perm[j]))
    return GCongruence.from_labels(uf.labels())


def enumerate_congruences(
    gset: GSet,
    budget: int = 500_000,
    max_carrier: int = MAX_ENUM_CARRIER,
) -> list[GCongruence]:
    """All invariant partitions of the carrier.

    Small carriers are swept through every set partition; larger ones
    (up to the cap) are generated as joins of principal congruences,
    which reaches every congruence since each is the join of the
    principal ones below it.
    """
    n = gset.size
    if n > max_carrier:
        raise CarrierTooLarge(f"carrier {n} exceeds enumeration cap {max_carrier}")
    if n <= BELL_ENUM_CARRIER:
        found = [
            GCongruence(labels)
            for labels in set_partitions(n)
            if is_congruence(gset, GCongruence(labels))
        ]
        if len(found) > budget:
            raise BudgetExceeded(f"{len(found)} congruences exceed budget {budget}")
        return found

    principals = {
        congruence_from_pairs(gset, [(gset.carrier[i], gset.carrier[j])])
        for i in range(n)
        for j in range(i + 1, n)
    }
    seen = {GCongruence.discrete(n)} | principals
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
    return sorted(seen, key=lambda c: (c.num_classes, c.class_of), reverse=True)


# --- modular-law instances ----------------------------------------------------


@dataclass(frozen=True)
class ModularInstance:
    """Both sides of (x v y) ^ z = (x ^ z) v y for congruences x, y, z."""

    lhs: GCongruence
    rhs: GCongruence
    y_below_z: bool

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def rhs_within_lhs(self) -> bool:
        return self.rhs.refines(self.lhs)


def check_modular_instance(
    x: GCongruence, y: GCongruence, z: GCongruence
) -> ModularInstance:
    if not (x.size == y.size == z.size):
        raise ValueError("congruences live on different carriers")
    lhs = x.join(y).meet(z)
    rhs = x.meet(z).join(y)
    return ModularInstance(lhs, rhs, y.refines(z))


# --- the balanced-identity replay ---------------------------------------------


@dataclass
class ReplayReport:
    lam: tuple[int, ...]
    carrier_size: int
    group_order: int
    congruences_valid: dict[str, bool]
    chain: list[dict[str, object]]
    join_links_xuy_xvy: bool
    tail_swap_below_generated: bool
    instances: dict[str, dict[str, object]]
    conclusions: dict[str, dict[str, bool]]
    trace: list[str]

    @property
    def ok(self) -> bool:
        """The facts the construction guarantees unconditionally."""
        return (
            all(self.congruences_valid.values())
            and all(bool(step["ok"]) for step in self.chain)
            and self.join_links_xuy_xvy
            and self.tail_swap_below_generated
            and all(bool(inst["rhs_within_lhs"]) for inst in self.instances.values())
            and all(c["conditional_ok"] for c in self.conclusions.values())
        )

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "carrier_size": self.carrier_size,
            "group_order": self.group_order,
            "congruences_valid": self.congruences_valid,
            "chain": self.chain,
            "join_links_xuy_xvy": self.join_links_xuy_xvy,
            "tail_swap_below_generated": self.tail_swap_below_generated,
            "modular_instances": self.instances,
            "conclusions": self.conclusions,
            "ok": self.ok,
            "trace": self.trace,
        }


def _replay_shape(u: Word, v: Word) -> int:
    if u == v:
        raise ReplayError("the identity is trivial; the two sides must differ")
    if not is_balanced(u, v):
        raise ReplayError("the identity must be balanced")
    letters = sorted(content(u))
    m = len(letters)
    if letters != list(range(1, m + 1)):
        raise ReplayError(
            f"letters must be exactly x1..x{m} (rename letters first)"
        )
    counts = letter_counts(u)
    mults = [counts[i] for i in range(1, m + 1)]
    if any(a <= b for a, b in zip(mults, mults[1:])) or mults[-1] <= 1:
        raise ReplayError(
            "multiplicities must strictly decrease and stay above 1 "
            f"(got {tuple(mults)}); multiply both sides by a suitable word "
            "on the right to reach this shape"
        )
    return m


def replay_balanced_identity(u: Word, v: Word, cap: int = CARRIER_CAP) -> ReplayReport:
    """Run the congruence-chain argument on the anagram G-set of xyu."""
    m = _replay_shape(u, v)
    x, y = letter(m + 1), letter(m + 2)
    lam = partition_of(x * y * u)
    gset = build_word_gset(lam, cap=cap)

    xyu, xyv = x * y * u, x * y * v
    yxu, yxv = y * x * u, y * x * v
    xuy, xvy = x * u * y, x * v * y
    yux, yvx = y * u * x, y * v * x
    names = {
        xyu: "xyu", xyv: "xyv", yxu: "yxu", yxv: "yxv",
        xuy: "xuy", xvy: "xvy", yux: "yux", yvx: "yvx",
    }
    idx = {w: gset.index_of(w) for w in names}

    def cong(classes: list[tuple[Word, Word]]) -> GCongruence:
        return GCongruence.from_classes(
            gset.size, [[idx[a], idx[b]] for a, b in classes]
        )

    tail_swap = cong([(xyu, xyv), (yxu, yxv)])
    second_to_end = cong([(xyu, xuy), (xyv, xvy), (yxu, yux), (yxv, yvx)])
    first_to_end = cong([(xyu, yux), (xyv, yvx), (yxu, xuy), (yxv, xvy)])
    generated = congruence_from_pairs(
        gset, [(xyu, xyv), (yxu, yxv), (xuy, xvy), (yux, yvx)]
    )

    trace: list[str] = [
        f"lambda = {lam}, carrier {gset.size}, stabilizer order {gset.group_order}",
        "anchor words: "
        + ", ".join(f"{n}={render_word(w)}" for w, n in names.items()),
    ]

    valid = {
        "tail_swap": is_congruence(gset, tail_swap),
        "second_to_end": is_congruence(gset, second_to_end),
        "first_to_end": is_congruence(gset, first_to_end),
        "generated": is_congruence(gset, generated),
    }
    for k, ok in valid.items():
        trace.append(f"{k} is a congruence: {ok}")

    chain_facts = [
        (xuy, "second_to_end", second_to_end, xyu),
        (xyu, "tail_swap", tail_swap, xyv),
        (xyv, "second_to_end", second_to_end, xvy),
    ]
    chain = []
    for a, rel_name, rel, b in chain_facts:
        ok = rel.related(idx[a], idx[b])
        chain.append(
            {"left": names[a], "relation": rel_name, "right": names[b], "ok": ok}
        )
        trace.append(f"{names[a]} ~ {names[b]} in {rel_name}: {ok}")

    joined = second_to_end.join(tail_swap)
    join_ok = joined.related(idx[xuy], idx[xvy])
    trace.append(f"(xuy, xvy) in second_to_end v tail_swap: {join_ok}")

    below = tail_swap.refines(generated)
    trace.append(f"tail_swap below generated congruence: {below}")

    instances: dict[str, dict[str, object]] = {}
    conclusions: dict[str, dict[str, bool]] = {}
    for rel_name, rel, concl_pair in (
        ("second_to_end", second_to_end, (xuy, xyu)),
        ("first_to_end", first_to_end, (xyu, yux)),
    ):
        inst = check_modular_instance(rel, tail_swap, generated)
        instances[rel_name] = {
            "equal": inst.equal,
            "rhs_within_lhs": inst.rhs_within_lhs,
            "y_below_z": inst.y_below_z,
            "lhs_nontrivial_classes": len(inst.lhs.nontrivial_classes()),
            "rhs_nontrivial_classes": len(inst.rhs.nontrivial_classes()),
        }
        concl = generated.related(idx[concl_pair[0]], idx[concl_pair[1]])
        conclusions[rel_name] = {
            "instance_equal": inst.equal,
            "conclusion_in_generated": concl,
            "conditional_ok": (not inst.equal) or concl,
        }
        trace.append(
            f"modular instance with {rel_name}: sides equal {inst.equal}, "
            f"inclusion {inst.rhs_within_lhs}; conclusion "
            f"({names[concl_pair[0]]}, {names[concl_pair[1]]}) in generated: {concl}"
        )

    return ReplayReport(
        lam=lam.parts,
        carrier_size=gset.size,
        group_order=gset.group_order,
        congruences_valid=valid,
        chain=chain,
        join_links_xuy_xvy=join_ok,
        tail_swap_below_generated=below,
        instances=instances,
        conclusions=conclusions,
        trace=trace,
    )
