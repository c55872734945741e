import itertools

import pytest

from semivar.semigroups import (
    TableError,
    builtin,
    cyclic_monoid,
    direct_product,
    parse_cayley_lines,
    satisfies,
    validate,
)
from semivar.varieties import Equation, ZeroIdentity, all_words, holds
from semivar.words import word


def eq(text_u: str, text_v: str) -> Equation:
    return Equation(word(text_u), word(text_v))


class TestValidate:
    def test_left_zero_table(self):
        s = validate([[0, 0], [1, 1]])
        assert s.order == 2 and s.zero is None

    def test_z2_table(self):
        s = validate([[0, 1], [1, 0]])
        assert s.order == 2

    def test_non_associative_table(self):
        with pytest.raises(TableError, match="associative"):
            validate([[1, 0], [0, 0]])

    def test_shape_and_range_errors(self):
        with pytest.raises(TableError):
            validate([[0, 0]])
        with pytest.raises(TableError):
            validate([[0, 2], [0, 0]])
        with pytest.raises(TableError):
            validate([])


class TestSatisfies:
    def test_right_zero_ignores_everything_but_last(self):
        assert satisfies(builtin("RZ2"), eq("ab", "cb")) == (True, None)

    def test_right_zero_refutes_commutativity(self):
        ok, witness = satisfies(builtin("RZ2"), eq("ab", "ba"))
        assert not ok
        assert witness == {1: 0, 2: 1}

    def test_semilattice_idempotent(self):
        assert satisfies(builtin("SL2"), eq("a", "aa")) == (True, None)

    def test_zero_identity_semantics(self):
        nil = builtin("NilN2")
        assert satisfies(nil, ZeroIdentity(word("aa"))) == (True, None)
        ok, witness = satisfies(nil, ZeroIdentity(word("a")))
        assert not ok and witness == {1: 0}

    def test_zero_identity_needs_zero_element(self):
        with pytest.raises(ValueError, match="zero"):
            satisfies(builtin("Zr(2)"), ZeroIdentity(word("aa")))


class TestBuiltins:
    def test_cyclic_monoid_2(self):
        m = builtin("CyclicMonoid(2)")
        assert m.order == 3
        assert m.table == ((0, 1, 2), (1, 2, 2), (2, 2, 2))
        assert m.zero == 2

    def test_cyclic_monoid_satisfies_its_axioms(self):
        for m in range(1, 5):
            model = cyclic_monoid(m)
            collapse = Equation(word("a") ** m, word("a") ** (m + 1))
            assert satisfies(model, collapse) == (True, None)
            assert satisfies(model, eq("ab", "ba")) == (True, None)

    def test_z2(self):
        z2 = builtin("Zr(2)")
        assert z2.table == ((0, 1), (1, 0))

    def test_nil2(self):
        nil = builtin("NilN2")
        assert nil.table == ((1, 1), (1, 1)) and nil.zero == 1

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            builtin("GL2")


class TestDirectProduct:
    def test_rectangular_band(self):
        band = direct_product(builtin("LZ2"), builtin("RZ2"))
        assert band.order == 4
        assert satisfies(band, eq("a", "aba")) == (True, None)
        ok, _ = satisfies(band, eq("ab", "ba"))
        assert not ok

    def test_product_with_trivial(self):
        s = builtin("SL2")
        prod = direct_product(s, builtin("Zr(1)"))
        for u in ["a", "aa", "ab", "ba"]:
            for v in ["a", "aa", "ab", "ba"]:
                assert satisfies(prod, eq(u, v)) == (
                    satisfies(s, eq(u, v))[0],
                    satisfies(s, eq(u, v))[1],
                )

    def test_semilattice_square(self):
        sq = direct_product(builtin("SL2"), builtin("SL2"))
        assert sq.order == 4
        assert satisfies(sq, eq("a", "aa")) == (True, None)
        assert satisfies(sq, eq("ab", "ba")) == (True, None)

    def test_satisfies_iff_both_factors(self):
        a, b = builtin("LZ2"), builtin("SL2")
        prod = direct_product(a, b)
        pool = list(all_words(3, 2))
        for u, v in itertools.product(pool, repeat=2):
            ident = Equation(u, v)
            assert satisfies(prod, ident)[0] == (
                satisfies(a, ident)[0] and satisfies(b, ident)[0]
            )


class TestCriterionSoundnessVsModels:
    pairs = [
        ("RZ2", "RZ"),
        ("LZ2", "LZ"),
        ("SL2", "SL"),
        ("Zr(2)", "COM"),
        ("NilN2", "COM"),
        ("CyclicMonoid(2)", "C2"),
        ("CyclicMonoid(3)", "C3"),
    ]

    @pytest.mark.parametrize("model_name,variety_name", pairs)
    def test_criterion_true_implies_model_satisfies(self, model_name, variety_name):
        from semivar.varieties import parse_variety

        model = builtin(model_name)
        variety = parse_variety(variety_name)
        pool = list(all_words(5, 2))
        for u, v in itertools.product(pool, repeat=2):
            ident = Equation(u, v)
            if holds(variety, ident).holds:
                assert satisfies(model, ident)[0], (model_name, str(ident))


class TestCayleyFiles:
    def test_roundtrip(self):
        lines = ["3  # order", "0 1 2", "1 2 2", "2 2 2", "zero: 2"]
        s = parse_cayley_lines(lines, name="cm2")
        assert s.order == 3 and s.zero == 2

    def test_zero_declaration_mismatch(self):
        with pytest.raises(TableError, match="absorbing"):
            parse_cayley_lines(["2", "0 1", "1 0", "zero: 0"])

    def test_row_count_mismatch(self):
        with pytest.raises(TableError):
            parse_cayley_lines(["2", "0 1"])

    def test_bad_header(self):
        with pytest.raises(TableError):
            parse_cayley_lines(["x", "0"])
