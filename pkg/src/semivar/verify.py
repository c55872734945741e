"""The one-shot verification suite behind the verify-paper subcommand.

Each check is a pure function returning (status, witness); the runner
times them and assembles a Report.  Two budget profiles exist: "quick"
trims the scan bounds for a fast turnaround, "full" runs everything at
the bounds the acceptance tests pin.  All checks are deterministic
exhaustive sweeps; nothing is randomized, so identical inputs give
identical reports.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable

from . import deduction, gsets, lattices, semigroups, varieties
from .report import CheckRecord, Report
from .varieties import COM, LZ, P, PREV, RZ, SL, Equation, cm, holds
from .words import PartitionLambda, Word, letter, word

CheckFn = Callable[[], tuple[str, str | None]]


@dataclass(frozen=True)
class Profile:
    name: str
    scan_len: int = 4
    scan_letters: int = 3
    join_scans: tuple[tuple[int, int], ...] = ((4, 3), (5, 2))
    consistency_lens: tuple[int, int, int] = (5, 5, 4)  # P, C2, SL
    max_product_size: int = 10
    chain_n: int = 3


QUICK = Profile(
    "quick",
    scan_len=4,
    scan_letters=3,
    join_scans=((4, 3), (5, 2)),
    consistency_lens=(4, 4, 4),
    max_product_size=8,
    chain_n=3,
)
FULL = Profile("full")

PROFILES = {"quick": QUICK, "full": FULL}


def _pairs(max_len: int, n_letters: int) -> Iterable[Equation]:
    pool = list(varieties.all_words(max_len, n_letters))
    for u in pool:
        for v in pool:
            yield Equation(u, v)


# --- criterion / model checks ---------------------------------------------------


def check_exact_agreement(
    variety: varieties.Variety, model_name: str, max_len: int = 4, n_letters: int = 3
) -> tuple[str, str | None]:
    """Criterion and exhaustive model evaluation must coincide everywhere."""
    model = semigroups.builtin(model_name)
    for eq in _pairs(max_len, n_letters):
        c = holds(variety, eq).holds
        m, _ = semigroups.satisfies(model, eq)
        if c != m:
            return "fail", f"{eq}: criterion {c}, {model_name} {m}"
    return "pass", None


def check_soundness(
    variety: varieties.Variety,
    model_names: tuple[str, ...],
    max_len: int = 4,
    n_letters: int = 3,
) -> tuple[str, str | None]:
    """Criterion-true must imply satisfaction in every listed model."""
    models = [semigroups.builtin(n) for n in model_names]
    for eq in _pairs(max_len, n_letters):
        if holds(variety, eq).holds:
            for model in models:
                ok, assignment = semigroups.satisfies(model, eq)
                if not ok:
                    return "fail", f"{eq} passes {variety} but fails in {model}: {assignment}"
    return "pass", None


def check_join_scan(max_len: int, max_letters: int) -> tuple[str, str | None]:
    ok, counterexample = varieties.join_contains_p_scan(max_len, max_letters)
    if ok:
        return "pass", None
    return "fail", f"holds in C2 and RZ but not P: {counterexample}"


def swap_identity(u: Word) -> Equation:
    """xuy = yux with x and y fresh above the letters of u."""
    m = max(u.letters)
    x, y = letter(m + 1), letter(m + 2)
    return Equation(x * u * y, y * u * x)


def check_swap_identity_failures(
    samples: tuple[str, ...] = ("aaabb", "aaaabbbcc")
) -> tuple[str, str | None]:
    """xuy = yux must fail in LZ, RZ, P, P_rev and hold in COM, SL."""
    for text in samples:
        eq = swap_identity(word(text))
        for v in (LZ, RZ, P, PREV):
            if holds(v, eq).holds:
                return "fail", f"{eq} unexpectedly holds in {v}"
        for v in (COM, SL):
            if not holds(v, eq).holds:
                return "fail", f"{eq} unexpectedly fails in {v}"
    return "pass", None


# --- the balanced-identity replay -----------------------------------------------


def check_replay(u_text: str = "aaabb", v_text: str = "bbaaa") -> tuple[str, str | None]:
    rep = gsets.replay_balanced_identity(word(u_text), word(v_text))
    facts = {
        "lambda": rep.lam == (3, 2, 1, 1),
        "carrier": rep.carrier_size == 420,
        "congruences": all(rep.congruences_valid.values()),
        "chain": all(bool(s["ok"]) for s in rep.chain),
        "join": rep.join_links_xuy_xvy,
        "inclusion": all(bool(i["rhs_within_lhs"]) for i in rep.instances.values()),
        "conditionals": all(c["conditional_ok"] for c in rep.conclusions.values()),
    }
    bad = [k for k, ok in facts.items() if not ok]
    if bad:
        return "fail", f"replay facts failed: {', '.join(bad)}"
    return "pass", None


# --- identity systems -------------------------------------------------------------


def p_axioms() -> deduction.IdentitySystem:
    return deduction.system(
        {Equation(word("ab"), word("aab")), Equation(word("aabb"), word("bbaa"))},
        label="P axioms",
    )


def c2_axioms() -> deduction.IdentitySystem:
    return deduction.system(
        {Equation(word("aa"), word("aaa")), Equation(word("ab"), word("ba"))},
        label="C2 axioms",
    )


def sl_axioms() -> deduction.IdentitySystem:
    return deduction.system(
        {Equation(word("a"), word("aa")), Equation(word("ab"), word("ba"))},
        label="SL axioms",
    )


def check_sapir_families() -> tuple[str, str | None]:
    """S(G) at r=2 with basis {aa}: the four families, x^0 expanded to x^6."""
    sys2 = deduction.sapir_system(2, {word("aa")})
    expected = {
        Equation(word("bcd"), word("bcccd")),
        Equation(word("b") ** 6 * word("c") ** 6, word("c") ** 6 * word("b") ** 6),
        Equation(word("bb"), word("bbbb")),
        Equation(word("b") * word("aa") ** 2 * word("c"), word("b") * word("aa") * word("c")),
    }
    got = sys2.generated.equations
    if got != frozenset(expected):
        missing = {str(e) for e in expected - set(got)}
        extra = {str(e) for e in set(got) - expected}
        return "fail", f"families differ; missing {missing}, extra {extra}"

    sys1 = deduction.sapir_system(1, {word("a")})
    need = {
        Equation(word("bb"), word("bbb")),
        Equation(word("bbcc"), word("ccbb")),
    }
    if not need <= set(sys1.generated.equations):
        return "fail", "r=1 system lacks x^2=x^3 or x^2y^2=y^2x^2"

    with_verbal = deduction.sapir_with_verbal(2, {word("aa")}, {word("a")})
    xwx = word("b") * word("a") * word("b")
    if Equation(xwx, xwx**3) not in with_verbal.generated.equations:
        return "fail", "verbal family x w x = (x w x)^3 missing"
    return "pass", None


def check_power_chain(r: int = 2, w_text: str = "a", n: int = 3) -> tuple[str, str | None]:
    res = deduction.derive_power_chain(r, word(w_text), n)
    if not res.proved:
        return "unknown", f"bounded search gave {res.outcome}"
    goal = deduction.power_chain_goal(word(w_text), n)
    if not deduction.validate_trace(goal, res.trace):
        return "fail", "trace does not replay"
    return "pass", None


def check_trace_soundness() -> tuple[str, str | None]:
    cases = [
        (p_axioms(), Equation(word("ab"), word("aaab"))),
        (p_axioms(), Equation(word("aabb"), word("bbaa"))),
        (c2_axioms(), Equation(word("ab"), word("ba"))),
        (c2_axioms(), Equation(word("aab"), word("baaa"))),
        (sl_axioms(), Equation(word("ab"), word("bbaa"))),
        (
            deduction.system({Equation(word("aba"), word("abba"))}),
            Equation(word("aba"), word("abbbba")),
        ),
    ]
    for sys, eq in cases:
        res = deduction.derive(sys, eq)
        if not res.proved:
            return "unknown", f"{eq} under {sys}: {res.outcome}"
        if not deduction.validate_trace(eq, res.trace):
            return "fail", f"{eq} under {sys}: trace does not replay"
    return "pass", None


def check_consistency(
    variety: varieties.Variety, sys: deduction.IdentitySystem, max_len: int
) -> tuple[str, str | None]:
    ok, counterexample = deduction.consistency_scan(variety, sys, max_len)
    if ok:
        return "pass", None
    return "fail", f"derivable {counterexample} rejected by {variety}"


# --- lattice sweeps -----------------------------------------------------------------


def catalog_members(max_product_size: int = 10) -> list[lattices.FiniteLattice]:
    bases = [
        lattices.chain(2),
        lattices.chain(3),
        lattices.chain(4),
        lattices.chain(5),
        lattices.boolean(2),
        lattices.boolean(3),
        lattices.m3(),
        lattices.n5(),
    ]
    out = list(bases)
    for i, a in enumerate(bases):
        for b in bases[i:]:
            if a.size * b.size <= max_product_size:
                out.append(lattices.product(a, b))
    return out


def catalog_closure(max_product_size: int = 10) -> list[lattices.FiniteLattice]:
    """Catalog members, their products, and every proper quotient."""
    members = catalog_members(max_product_size)
    out = list(members)
    for lat in members:
        for theta in lattices.enumerate_lattice_congruences(lat):
            if 1 < theta.num_classes < lat.size:
                q, _ = lattices.quotient(lat, theta)
                out.append(q)
    return out


def check_lower_modular_lift_sweep(max_product_size: int = 10) -> tuple[str, str | None]:
    for lat in catalog_closure(max_product_size):
        ok, witness = lattices.check_lower_modular_lift(lat)
        if not ok:
            return "fail", f"{lat}: lift failed at (x, a) = {witness}"
    return "pass", None


def check_upper_modular_sweep(max_product_size: int = 10) -> tuple[str, str | None]:
    for lat in catalog_closure(max_product_size):
        ok, witness = lattices.check_upper_modular_preservation(lat)
        if not ok:
            theta, x = witness  # type: ignore[misc]
            return "fail", f"{lat}: image of {x} not upper-modular under {theta.class_of}"
    return "pass", None


def check_special_elements(max_product_size: int = 10) -> tuple[str, str | None]:
    pent, diamond = lattices.n5(), lattices.m3()
    if lattices.classify_element(pent, 3).modular:
        return "fail", "N5 element c looks modular"
    if not all(lattices.classify_element(diamond, x).modular for x in range(diamond.size)):
        return "fail", "some element of M3 is not modular"
    if lattices.is_zero_distributive(diamond)[0]:
        return "fail", "M3 looks 0-distributive"
    if not lattices.is_zero_distributive(pent)[0]:
        return "fail", "N5 not 0-distributive"
    for n in range(2, 6):
        if not lattices.is_zero_distributive(lattices.chain(n))[0]:
            return "fail", f"chain({n}) not 0-distributive"
    for lat in catalog_members(max_product_size):
        flags = lattices.classify_all(lat)
        if not flags[lat.bottom].distributive:
            return "fail", f"bottom of {lat} not distributive"
        for x, f in enumerate(flags):
            if f.distributive and not f.lower_modular:
                return "fail", f"{lat}: element {x} distributive but not lower-modular"
    return "pass", None


def check_gset_counts() -> tuple[str, str | None]:
    facts: list[tuple[str, bool]] = []
    g21 = gsets.build_word_gset(PartitionLambda((2, 1)))
    facts.append(("|W(2,1)| = 3", g21.size == 3))
    facts.append(("W(2,1) group trivial", g21.group_order == 1))
    g11 = gsets.build_word_gset(PartitionLambda((1, 1)))
    facts.append(("|W(1,1)| = 2", g11.size == 2))
    facts.append(("W(1,1) group order 2", g11.group_order == 2))
    facts.append(("|Con(W(1,1))| = 2", len(gsets.enumerate_congruences(g11)) == 2))
    g3211 = gsets.build_word_gset(PartitionLambda((3, 2, 1, 1)))
    facts.append(("|W(3,2,1,1)| = 420", g3211.size == 420))
    facts.append(("W(3,2,1,1) group order 2", g3211.group_order == 2))
    bad = [label for label, ok in facts if not ok]
    if bad:
        return "fail", "; ".join(bad)
    return "pass", None


# --- suite assembly ------------------------------------------------------------------


def suite_checks(profile: Profile) -> list[tuple[str, CheckFn]]:
    len_p, len_c2, len_sl = profile.consistency_lens
    checks: list[tuple[str, CheckFn]] = [
        (
            "criteria.rz-model-agreement",
            lambda: check_exact_agreement(RZ, "RZ2", profile.scan_len, profile.scan_letters),
        ),
        (
            "criteria.lz-model-agreement",
            lambda: check_exact_agreement(LZ, "LZ2", profile.scan_len, profile.scan_letters),
        ),
        (
            "criteria.sl-model-agreement",
            lambda: check_exact_agreement(SL, "SL2", profile.scan_len, profile.scan_letters),
        ),
        (
            "criteria.com-model-soundness",
            lambda: check_soundness(
                COM, ("Zr(2)", "SL2", "NilN2"), profile.scan_len, profile.scan_letters
            ),
        ),
        (
            "criteria.c2-model-soundness",
            lambda: check_soundness(
                cm(2), ("CyclicMonoid(2)",), profile.scan_len, profile.scan_letters
            ),
        ),
    ]
    for max_len, max_letters in profile.join_scans:
        checks.append(
            (
                f"join.c2-rz-covers-p-{max_len}x{max_letters}",
                lambda ml=max_len, mx=max_letters: check_join_scan(ml, mx),
            )
        )
    checks += [
        ("swap.fails-outside-commutative", check_swap_identity_failures),
        ("replay.chain-and-modular-instance", check_replay),
        ("sapir.families-r2-basis-aa", check_sapir_families),
        (
            "sapir.power-chain-r2-n3",
            lambda: check_power_chain(2, "a", profile.chain_n),
        ),
        ("deduction.trace-soundness", check_trace_soundness),
        ("deduction.consistency-P", lambda: check_consistency(P, p_axioms(), len_p)),
        ("deduction.consistency-C2", lambda: check_consistency(cm(2), c2_axioms(), len_c2)),
        ("deduction.consistency-SL", lambda: check_consistency(SL, sl_axioms(), len_sl)),
        (
            "lattice.lower-modular-lift",
            lambda: check_lower_modular_lift_sweep(profile.max_product_size),
        ),
        (
            "lattice.upper-modular-preservation",
            lambda: check_upper_modular_sweep(profile.max_product_size),
        ),
        (
            "lattice.special-elements",
            lambda: check_special_elements(profile.max_product_size),
        ),
        ("gset.counts", check_gset_counts),
    ]
    return checks


def run_suite(profile: Profile, echo: Callable[[str], None] | None = None) -> Report:
    report = Report(suite=f"verify:{profile.name}")
    for check_id, fn in suite_checks(profile):
        t0 = time.perf_counter()
        try:
            status, witness = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            status, witness = "fail", f"exception: {exc!r}"
        millis = (time.perf_counter() - t0) * 1000.0
        record = CheckRecord(check_id, status, witness, millis)
        report.checks.append(record)
        if echo:
            mark = {"pass": "PASS", "fail": "FAIL", "unknown": "????"}[status]
            echo(f"[{mark}] {check_id} ({millis:.0f} ms)")
            if witness and status != "pass":
                echo(f"       {witness}")
    return report
