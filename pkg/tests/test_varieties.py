import itertools

import pytest

from semivar import semigroups
from semivar.varieties import (
    COM,
    LZ,
    P,
    PREV,
    RZ,
    SL,
    T,
    Equation,
    UnsupportedQueryError,
    ZeroIdentity,
    all_words,
    cm,
    holds,
    holds_in_join,
    join_contains_p_scan,
    parse_identity,
    parse_identity_lines,
    parse_variety,
    zero_reduced,
)
from semivar.words import Word, apply_substitution, contains_instance, word

ZR_AA = zero_reduced({word("aa")})
SAMPLE_VARIETIES = [T, SL, LZ, RZ, COM, cm(2), cm(3), P, PREV, ZR_AA]


def eq(text: str) -> Equation:
    ident = parse_identity(text)
    assert isinstance(ident, Equation)
    return ident


# independent per-variety keys: each criterion must coincide with key equality
def variety_key(v, w: Word):
    counts = {x: w.letters.count(x) for x in set(w.letters)}
    if v.kind == "T":
        return ()
    if v.kind == "SL":
        return frozenset(counts)
    if v.kind == "LZ":
        return w.letters[0]
    if v.kind == "RZ":
        return w.letters[-1]
    if v.kind == "COM":
        return tuple(sorted(counts.items()))
    if v.kind == "Cm":
        return tuple(sorted((x, min(c, v.m)) for x, c in counts.items()))
    if v.kind in ("P", "Prev"):
        t = w.letters[-1] if v.kind == "P" else w.letters[0]
        tail = "many" if counts[t] > 1 else ("once", t)
        return frozenset(counts), tail
    if v.kind == "ZR":
        return "null" if any(contains_instance(w, p) for p in v.patterns) else w
    raise AssertionError(v)


class TestHoldsExamples:
    def test_p_defining_identity(self):
        assert holds(P, eq("ab = aab")).holds

    def test_p_rejects_commutativity(self):
        assert not holds(P, eq("ab = ba")).holds

    def test_rz_last_letter(self):
        assert holds(RZ, eq("ab = cb")).holds

    def test_c2_square_commutation(self):
        assert holds(cm(2), eq("aabb = bbaa")).holds

    def test_c2_rejects_absorption_with_model_crosscheck(self):
        ident = eq("ab = aab")
        assert not holds(cm(2), ident).holds
        ok, witness = semigroups.satisfies(semigroups.builtin("CyclicMonoid(2)"), ident)
        assert not ok and witness is not None

    def test_zero_reduced_equation(self):
        assert holds(ZR_AA, eq("abab = baba")).holds
        assert not holds(ZR_AA, eq("aba = bab")).holds

    def test_trivial_variety(self):
        assert holds(T, eq("a = bbb")).holds

    def test_reason_strings(self):
        res = holds(RZ, eq("ab = ba"))
        assert not res.holds and "last" in res.reason


class TestZeroIdentities:
    def test_zero_reduced_accepts(self):
        assert holds(ZR_AA, ZeroIdentity(word("aba") * word("a"))).holds
        assert not holds(ZR_AA, ZeroIdentity(word("aba"))).holds

    @pytest.mark.parametrize("v", [T, SL, LZ, RZ, COM, cm(2), P, PREV])
    def test_unsupported_elsewhere(self, v):
        with pytest.raises(UnsupportedQueryError):
            holds(v, ZeroIdentity(word("aa")))


class TestJoin:
    def test_fails_in_one_component(self):
        assert not holds_in_join([cm(2), RZ], eq("aab = ab"))

    def test_holds_in_both(self):
        assert holds_in_join([cm(2), RZ], eq("aabbc = bbaac"))

    def test_trivial_join(self):
        assert holds_in_join([T], eq("a = bb"))

    def test_join_propagates_unsupported_queries(self):
        with pytest.raises(UnsupportedQueryError):
            holds_in_join([cm(2), RZ], ZeroIdentity(word("aa")))

    def test_scan_4_3(self):
        assert join_contains_p_scan(4, 3) == (True, None)

    def test_scan_5_2(self):
        assert join_contains_p_scan(5, 2) == (True, None)

    def test_scan_1_1(self):
        assert join_contains_p_scan(1, 1) == (True, None)

    def test_scan_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            join_contains_p_scan(0, 2)


class TestCriteriaAreKernelEquivalences:
    # matching an independently computed key makes each criterion an
    # equivalence (reflexive, symmetric, transitive) by construction
    @pytest.mark.parametrize("v", SAMPLE_VARIETIES, ids=str)
    def test_holds_equals_key_equality(self, v):
        pool = list(all_words(6, 2)) + list(all_words(3, 3))
        keys = {u: variety_key(v, u) for u in pool}
        for u in pool:
            for w in pool:
                assert holds(v, Equation(u, w)).holds == (keys[u] == keys[w])

    @pytest.mark.parametrize("v", SAMPLE_VARIETIES, ids=str)
    def test_reflexive_up_to_length_6(self, v):
        for u in all_words(6, 2):
            assert holds(v, Equation(u, u)).holds


class TestStability:
    substitutions = [
        {},
        {1: word("b")},
        {1: word("ab")},
        {2: word("aa")},
        {1: word("ba"), 2: word("b")},
    ]

    @pytest.mark.parametrize("v", SAMPLE_VARIETIES, ids=str)
    def test_substitution_stability(self, v):
        pool = list(all_words(4, 2))
        for u, w in itertools.product(pool, repeat=2):
            if not holds(v, Equation(u, w)).holds:
                continue
            for s in self.substitutions:
                image = Equation(apply_substitution(u, s), apply_substitution(w, s))
                assert holds(v, image).holds, (v, u, w, s)

    @pytest.mark.parametrize("v", SAMPLE_VARIETIES, ids=str)
    def test_context_stability(self, v):
        pool = list(all_words(3, 2))
        contexts = [word("a"), word("b"), word("ab"), word("cc")]
        for u, w in itertools.product(pool, repeat=2):
            if not holds(v, Equation(u, w)).holds:
                continue
            for a, b in itertools.product(contexts, repeat=2):
                assert holds(v, Equation(a * u * b, a * w * b)).holds, (v, u, w, a, b)


class TestDefiningIdentities:
    cases = [
        (P, ["ab = aab", "aabb = bbaa"]),
        (PREV, ["ab = abb", "aabb = bbaa"]),
        (cm(2), ["aa = aaa", "ab = ba"]),
        (cm(3), ["aaa = aaaa", "ab = ba"]),
        (SL, ["a = aa", "ab = ba"]),
        (COM, ["ab = ba"]),
        (RZ, ["ab = b"]),
        (LZ, ["ab = a"]),
    ]

    @pytest.mark.parametrize("v,identities", cases, ids=lambda c: str(c))
    def test_own_axioms_pass(self, v, identities):
        for text in identities:
            assert holds(v, eq(text)).holds, (v, text)


class TestParsing:
    def test_parse_identity_forms(self):
        assert parse_identity("ab = ba") == Equation(word("ab"), word("ba"))
        assert parse_identity("aa = 0") == ZeroIdentity(word("aa"))

    def test_parse_rejects_garbage(self):
        for bad in ["ab == ba", "= a", "ab", "0 = ab", "a2 = b"]:
            with pytest.raises(ValueError):
                parse_identity(bad)

    def test_parse_lines_with_comments(self):
        lines = ["# header", "ab = ba  # swap", "", "aa = 0"]
        idents = parse_identity_lines(lines)
        assert idents == [Equation(word("ab"), word("ba")), ZeroIdentity(word("aa"))]

    def test_parse_lines_reports_line_number(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_identity_lines(["ab = ba", "oops ="])

    def test_parse_variety(self):
        assert parse_variety("C2") == cm(2)
        assert parse_variety("C1") == SL
        assert parse_variety("C0") == T
        assert parse_variety("Prev") == PREV
        assert parse_variety("ZR", [word("aa")]) == ZR_AA
        with pytest.raises(ValueError):
            parse_variety("XXL")

    def test_cm_normalization(self):
        assert cm(0) == T and cm(1) == SL
        assert str(cm(4)) == "C4"
