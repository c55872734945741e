"""Bounded equational reasoning over identity systems.

The prover runs a breadth-first closure of the one-step rewrite relation
w -> a s(q) b, where (p, q) ranges over the axioms read in both
directions and s is a substitution matched against the factor a s(p) b.
Everything is bounded: intermediate word length, substitution image
length, and the number of visited words.  The three outcomes are

  proved    a rewrite path was found; the trace replays step by step,
  refuted   a finite model of the axioms falsifies the identity,
  unknown   the budget ran out; never treated as a refutation.

Derivability from a finite system is undecidable in general, so the
honest third outcome is unavoidable.  A direction whose right-hand side
uses letters absent from the left is skipped (it would branch over an
unbounded choice of images); all systems built here are content-regular,
so nothing is lost for them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .semigroups import FiniteSemigroup, satisfies
from .varieties import Equation, Identity, Variety, all_words, holds, parse_identity
from .words import Word, apply_substitution, content, letter, match_at, render_word


@dataclass(frozen=True)
class Bounds:
    max_word_len: int = 16
    max_image_len: int = 4
    max_states: int = 2_000_000

    def __post_init__(self) -> None:
        if self.max_word_len < 1 or self.max_image_len < 1 or self.max_states < 1:
            raise ValueError("all bounds must be positive")


@dataclass(frozen=True)
class IdentitySystem:
    """A finite set of equations plus zero patterns, under one label."""

    equations: frozenset[Equation]
    zero_patterns: frozenset[Word] = field(default_factory=frozenset)
    label: str = ""

    def __str__(self) -> str:
        return self.label or f"system of {len(self.equations)} equations"


def system(eqs: Iterable[Equation], zeros: Iterable[Word] = (), label: str = "") -> IdentitySystem:
    return IdentitySystem(frozenset(eqs), frozenset(zeros), label)


def parse_system_lines(lines: Iterable[str], default_label: str = "") -> IdentitySystem:
    """Identity-file syntax plus an optional leading "label:" header."""
    label = default_label
    eqs: list[Equation] = []
    zeros: list[Word] = []
    for raw in lines:
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        if text.startswith("label:"):
            label = text[len("label:") :].strip()
            continue
        ident = parse_identity(text)
        if isinstance(ident, Equation):
            eqs.append(ident)
        else:
            zeros.append(ident.body)
    return system(eqs, zeros, label)


@dataclass(frozen=True)
class RewriteStep:
    before: Word
    after: Word
    rule: Equation
    flipped: bool
    start: int
    subst: tuple[tuple[int, Word], ...]

    def describe(self) -> str:
        arrow = "<-" if self.flipped else "->"
        sub = ", ".join(f"{render_word(letter(x))}:{render_word(img)}" for x, img in self.subst)
        return (
            f"{render_word(self.before)} => {render_word(self.after)}"
            f"  via {self.rule} ({arrow}) at {self.start} [{sub}]"
        )


@dataclass(frozen=True)
class DeductionResult:
    outcome: str  # "proved" | "refuted" | "unknown"
    trace: tuple[RewriteStep, ...] = ()
    model: str | None = None
    assignment: tuple[tuple[int, int], ...] | None = None

    @property
    def proved(self) -> bool:
        return self.outcome == "proved"


def _zero_pattern_equations(zeros: Iterable[Word]) -> Iterator[Equation]:
    # w = 0 abbreviates wx = xw = w with x outside c(w); only the erasing
    # directions survive the content filter below.
    for w in zeros:
        x = letter(max(content(w)) + 1)
        yield Equation(w * x, w)
        yield Equation(x * w, w)


def _directions(sys: IdentitySystem) -> list[tuple[Word, Word, Equation, bool]]:
    dirs: list[tuple[Word, Word, Equation, bool]] = []
    eqs = list(sys.equations) + list(_zero_pattern_equations(sys.zero_patterns))
    for eq in eqs:
        if eq.trivial:
            continue
        if content(eq.rhs) <= content(eq.lhs):
            dirs.append((eq.lhs, eq.rhs, eq, False))
        if content(eq.lhs) <= content(eq.rhs):
            dirs.append((eq.rhs, eq.lhs, eq, True))
    return dirs


def one_step_rewrites(
    w: Word,
    dirs: Sequence[tuple[Word, Word, Equation, bool]],
    bounds: Bounds,
) -> Iterator[tuple[Word, RewriteStep]]:
    """All words reachable from w by one axiom application in context."""
    for p, q, rule, flipped in dirs:
        if len(p) > len(w):
            continue
        for start in range(len(w)):
            for end, subst in match_at(w, start, p, bounds.max_image_len):
                img = apply_substitution(q, subst)
                new_letters = w.letters[:start] + img.letters + w.letters[end:]
                if len(new_letters) > bounds.max_word_len:
                    continue
                new = Word(new_letters)
                step = RewriteStep(
                    w, new, rule, flipped, start, tuple(sorted(subst.items()))
                )
                yield new, step


def _invert(step: RewriteStep) -> RewriteStep:
    # valid because kept directions bind every letter of both rule sides
    return RewriteStep(
        step.after, step.before, step.rule, not step.flipped, step.start, step.subst
    )


def _path_to_root(
    parents: dict[Word, tuple[Word, RewriteStep] | None], end: Word
) -> list[RewriteStep]:
    steps = []
    cur = end
    while parents[cur] is not None:
        prev, step = parents[cur]  # type: ignore[misc]
        steps.append(step)
        cur = prev
    steps.reverse()
    return steps


def derive(sys: IdentitySystem, eq: Equation, bounds: Bounds = Bounds()) -> DeductionResult:
    """Meet-in-the-middle search for a rewrite path joining the two sides.

    Both sides are expanded under the same one-step relation; a common
    word yields the trace (the tail from the right side is replayed in
    reverse).  A "proved" result is sound: the trace is a genuine
    derivation from the system.  "unknown" means only that the bounded
    search gave up.
    """
    if eq.trivial:
        return DeductionResult("proved", ())
    if len(eq.rhs) > bounds.max_word_len or len(eq.lhs) > bounds.max_word_len:
        return DeductionResult("unknown")
    dirs = _directions(sys)
    parents_f: dict[Word, tuple[Word, RewriteStep] | None] = {eq.lhs: None}
    parents_b: dict[Word, tuple[Word, RewriteStep] | None] = {eq.rhs: None}
    frontier_f = [eq.lhs]
    frontier_b = [eq.rhs]

    def assemble(meet: Word) -> tuple[RewriteStep, ...]:
        forward = _path_to_root(parents_f, meet)
        backward = _path_to_root(parents_b, meet)
        return tuple(forward) + tuple(_invert(s) for s in reversed(backward))

    while frontier_f and frontier_b:
        expand_forward = len(parents_f) <= len(parents_b)
        parents, others = (
            (parents_f, parents_b) if expand_forward else (parents_b, parents_f)
        )
        frontier = frontier_f if expand_forward else frontier_b
        next_frontier: list[Word] = []
        for w in frontier:
            for new, step in one_step_rewrites(w, dirs, bounds):
                if new in parents:
                    continue
                parents[new] = (w, step)
                if new in others:
                    return DeductionResult("proved", assemble(new))
                if len(parents_f) + len(parents_b) > bounds.max_states:
                    return DeductionResult("unknown")
                next_frontier.append(new)
        if expand_forward:
            frontier_f = next_frontier
        else:
            frontier_b = next_frontier
    return DeductionResult("unknown")


def validate_trace(eq: Equation, trace: Sequence[RewriteStep]) -> bool:
    """Replay a proved trace independently of the search that found it."""
    cur = eq.lhs
    for step in trace:
        if step.before != cur:
            return False
        p, q = (step.rule.rhs, step.rule.lhs) if step.flipped else (step.rule.lhs, step.rule.rhs)
        subst = dict(step.subst)
        expected = apply_substitution(p, subst)
        end = step.start + len(expected)
        if cur.letters[step.start : end] != expected.letters:
            return False
        img = apply_substitution(q, subst)
        cur = Word(cur.letters[: step.start] + img.letters + cur.letters[end:])
        if cur != step.after:
            return False
    return cur == eq.rhs


def refute(models: Iterable[FiniteSemigroup], ident: Identity) -> DeductionResult:
    """First falsifying (model, assignment), else unknown."""
    for m in models:
        ok, assignment = satisfies(m, ident)
        if not ok:
            assert assignment is not None
            return DeductionResult(
                "refuted", model=str(m), assignment=tuple(sorted(assignment.items()))
            )
    return DeductionResult("unknown")


# --- identity systems attached to periodic group varieties ------------------


@dataclass(frozen=True)
class SapirSystem:
    """The identity system S(G) of a periodic group variety of exponent r,
    given by a basis {v_i = 1}, optionally cut down by a verbal family.

    The four base families, with x0 abbreviating x^(r(r+1)):

        xyz = xy^(r+1)z,   x0 y0 = y0 x0,   x^2 = x^(r+2),   x v_i^2 y = x v_i y

    and, when a generating word set W is supplied, additionally

        x w x = (x w x)^(r+1)   for every w in W.
    """

    r: int
    basis_words: frozenset[Word]
    verbal_words: frozenset[Word] | None
    generated: IdentitySystem


def _fresh_letters(used: set[int], count: int) -> list[int]:
    out: list[int] = []
    x = 1
    while len(out) < count:
        if x not in used:
            out.append(x)
        x += 1
    return out


def sapir_system(r: int, basis_words: Iterable[Word] = ()) -> SapirSystem:
    if r < 1:
        raise ValueError("the exponent r must be >= 1")
    basis = frozenset(basis_words)
    used = set().union(*(content(v) for v in basis)) if basis else set()
    fx, fy, fz = (letter(i) for i in _fresh_letters(used, 3))
    zero_power = r * (r + 1)
    eqs = {
        Equation(fx * fy * fz, fx * fy ** (r + 1) * fz),
        Equation(fx**zero_power * fy**zero_power, fy**zero_power * fx**zero_power),
        Equation(fx**2, fx ** (r + 2)),
    }
    for v in basis:
        eqs.add(Equation(fx * v**2 * fy, fx * v * fy))
    label = f"S(r={r};{len(basis)} basis words)"
    return SapirSystem(r, basis, None, system(eqs, label=label))


def sapir_with_verbal(
    r: int, basis_words: Iterable[Word], verbal_words: Iterable[Word]
) -> SapirSystem:
    """S(G) refined by the family x w x = (x w x)^(r+1) for w in the
    generating set; an empty generating set leaves S(G) unchanged."""
    base = sapir_system(r, basis_words)
    verbal = frozenset(verbal_words)
    used = set().union(*(content(v) for v in base.basis_words | verbal)) if (base.basis_words or verbal) else set()
    eqs = set(base.generated.equations)
    for w in sorted(verbal):
        (fi,) = _fresh_letters(used | set(content(w)), 1)
        fx = letter(fi)
        xwx = fx * w * fx
        eqs.add(Equation(xwx, xwx ** (r + 1)))
    label = f"S(r={r};{len(base.basis_words)} basis;{len(verbal)} verbal words)"
    return SapirSystem(r, base.basis_words, verbal, system(eqs, label=label))


def power_chain_goal(w: Word, n: int) -> Equation:
    """The target identity x w x = x w^(2n) x with x fresh above c(w)."""
    if n < 1:
        raise ValueError("the target power 2n needs n >= 1")
    fx = letter(_fresh_letters(set(content(w)), 1)[0])
    return Equation(fx * w * fx, fx * w ** (2 * n) * fx)


def derive_power_chain(
    r: int, w: Word, n: int, bounds: Bounds = Bounds()
) -> DeductionResult:
    """Derive x w x = x w^(2n) x from the squaring family at v = w.

    The system is {x w x = x w^2 x} plus x w^2 y = x w y, the basis
    family of S(G) instantiated at w; the exponent r only labels the
    enclosing system, the derivation itself is exponent-free.
    """
    if r < 1:
        raise ValueError("the exponent r must be >= 1")
    used = set(content(w))
    fx, fy = (letter(i) for i in _fresh_letters(used, 2))
    sys = system(
        {
            Equation(fx * w * fx, fx * w**2 * fx),
            Equation(fx * w**2 * fy, fx * w * fy),
        },
        label=f"power-collapse at {render_word(w)}",
    )
    return derive(sys, power_chain_goal(w, n), bounds)


# --- soundness scan against the word criteria --------------------------------


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[rj] = ri


def consistency_scan(
    v: Variety,
    sys: IdentitySystem,
    max_len: int,
    n_letters: int = 3,
    slack: int = 2,
    bounds: Bounds = Bounds(),
) -> tuple[bool, Equation | None]:
    """Every identity derivable inside the bounded universe must pass
    the criterion of v.  Words up to max_len + slack form the rewrite
    graph; two words of length <= max_len in one component constitute a
    derived identity.  Returns the first violating equation, if any.

    The component closure under-approximates derivability (longer
    intermediates are cut off), which is exactly what a soundness check
    needs.
    """
    work_len = min(bounds.max_word_len, max_len + slack)
    words = list(all_words(work_len, n_letters))
    index = {w: i for i, w in enumerate(words)}
    uf = _UnionFind(len(words))
    dirs = _directions(sys)
    work_bounds = Bounds(work_len, bounds.max_image_len, bounds.max_states)
    for w, i in index.items():
        for new, _step in one_step_rewrites(w, dirs, work_bounds):
            j = index.get(new)
            if j is not None:
                uf.union(i, j)

    components: dict[int, list[Word]] = {}
    for w, i in index.items():
        if len(w) <= max_len:
            components.setdefault(uf.find(i), []).append(w)
    for members in components.values():
        for u, w in itertools.combinations(members, 2):
            eq = Equation(u, w)
            if not holds(v, eq).holds:
                return False, eq
    return True, None
