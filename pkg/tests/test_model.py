from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from posslogic.model import (
    CharNeg,
    Clause,
    Const,
    Deg,
    Domain,
    FuzzyDef,
    KBError,
    Kind,
    KnowledgeBase,
    Literal,
    Max,
    Memb,
    Min,
    Sup,
    Valuation,
    Var,
    combine_nn,
    combine_npi,
    degree,
    dual,
    format_number,
    valuation_cmp,
    wclause,
    weight_eval,
)

F = Fraction
degrees = st.fractions(min_value=0, max_value=1, max_denominator=20)
valuations = st.builds(lambda k, d: Valuation(k, Deg(d)), st.sampled_from(list(Kind)), degrees)
LATE = FuzzyDef("late", points=((F(8), F(0)), (F(12), F(1))))


def N(x):
    return Valuation.nec(x)


def P(x):
    return Valuation.pos(x)


class TestDegrees:
    def test_decimal_text_is_exact(self):
        assert degree("0.7") == F(7, 10)
        assert degree(0.1) == F(1, 10)

    def test_out_of_range(self):
        with pytest.raises(KBError):
            degree("1.5")

    @pytest.mark.parametrize("x,text", [(F(3, 4), "0.75"), (F(1), "1"), (F(0), "0"), (F(1, 3), "1/3")])
    def test_format(self, x, text):
        assert format_number(x) == text


class TestValuationOrder:
    def test_possibility_below_necessity(self):
        assert valuation_cmp(P("0.8"), N("0.6")) == -1

    def test_reflexive(self):
        assert valuation_cmp(N("0.3"), N("0.3")) == 0

    def test_possibility_by_degree(self):
        assert valuation_cmp(P("0.2"), P("0.9")) == -1

    def test_boundary_identified(self):
        assert valuation_cmp(N(0), P(1)) == 0
        assert valuation_cmp(P("0.99"), N(0)) == -1
        assert valuation_cmp(P(1), N("0.01")) == -1

    def test_unresolved_weight(self):
        v = Valuation(Kind.N, Memb("late", (Var("T"),)))
        with pytest.raises(KBError, match="unresolved weight variable"):
            valuation_cmp(v, N(1))

    @given(valuations, valuations, valuations)
    def test_total_preorder(self, a, b, c):
        assert valuation_cmp(a, b) == -valuation_cmp(b, a)
        if valuation_cmp(a, b) <= 0 and valuation_cmp(b, c) <= 0:
            assert valuation_cmp(a, c) <= 0

    @given(valuations, valuations)
    def test_antisymmetric_up_to_boundary(self, a, b):
        if valuation_cmp(a, b) == 0 and a != b:
            assert {str(a), str(b)} == {"N 0", "P 1"}


class TestCombination:
    @pytest.mark.parametrize("a,b,out", [("1", "1", "1"), ("0.8", "0.7", "0.7"), ("0", "0.9", "0")])
    def test_nn(self, a, b, out):
        assert combine_nn(degree(a), degree(b)) == degree(out)

    @pytest.mark.parametrize("a,b,out", [("0.7", "0.8", "0.8"), ("0.3", "0.6", "0"), ("1", "0.4", "0.4")])
    def test_npi(self, a, b, out):
        assert combine_npi(degree(a), degree(b)) == degree(out)

    @given(degrees, degrees)
    def test_laws(self, a, b):
        assert combine_nn(a, b) == min(a, b)
        assert combine_npi(a, b) <= b
        if combine_npi(a, b) > 0:
            assert a + b > 1

    @given(degrees)
    def test_dual_involution(self, a):
        assert dual(a) == 1 - a
        assert dual(dual(a)) == a


class TestFuzzy:
    def test_late_values(self):
        kb = KnowledgeBase((), {"late": LATE})
        assert weight_eval(Memb("late", (Const(F(11)),)), None, kb) == F(3, 4)
        assert weight_eval(Memb("late", (Const(F(8)),)), None, kb) == 0
        w = Min(Deg(F(3, 5)), Memb("late", (Const(F(12)),)))
        assert weight_eval(w, None, kb) == F(3, 5)

    def test_constant_extension(self):
        assert LATE.at(F(0)) == 0 and LATE.at(F(30)) == 1

    def test_breakpoints_must_increase(self):
        with pytest.raises(KBError):
            FuzzyDef("bad", points=((F(2), F(0)), (F(1), F(1))))

    @given(st.lists(st.tuples(st.integers(-20, 20), degrees), min_size=2, max_size=6, unique_by=lambda p: p[0]),
           st.fractions(min_value=-40, max_value=40, max_denominator=7))
    def test_values_in_unit_interval(self, pts, x):
        fd = FuzzyDef("f", points=tuple(sorted((F(a), y) for a, y in pts)))
        assert 0 <= fd.at(x) <= 1

    def test_table(self):
        fd = FuzzyDef("phi", table=(((Const("a"),), F(1, 2)),))
        assert fd(Const("a")) == F(1, 2)
        with pytest.raises(KBError):
            fd(Const("b"))


class TestWeightEval:
    def test_unbound(self):
        with pytest.raises(KBError):
            weight_eval(Memb("late", (Var("T"),)), None, KnowledgeBase((), {"late": LATE}))

    def test_undeclared_fuzzy(self):
        with pytest.raises(KBError):
            weight_eval(Memb("nope", (Const("a"),)))

    def test_charneg(self):
        atom = Literal("q", (Const("a"),))
        assert weight_eval(CharNeg(atom), hyp={atom: False}) == 1
        assert weight_eval(CharNeg(atom), hyp={atom: True}) == 0
        assert weight_eval(CharNeg(atom.negate()), hyp={atom: True}) == 1
        with pytest.raises(KBError, match="unassigned"):
            weight_eval(CharNeg(atom))

    @given(st.lists(degrees, min_size=1, max_size=5))
    def test_finite_sup_is_max(self, values):
        elems = tuple(Const(f"e{i}") for i in range(len(values)))
        fd = FuzzyDef("phi", table=tuple(((e,), v) for e, v in zip(elems, values)))
        kb = KnowledgeBase((), {"phi": fd}, {"d": Domain("d", elems)})
        assert weight_eval(Sup("T", "d", Memb("phi", (Var("T"),))), None, kb) == max(values)

    def test_interval_sup(self):
        kb = KnowledgeBase((), {"late": LATE}, {"t": Domain("t", interval=(F(8), F(12)))})
        w = Sup("T", "t", Min(Deg(F(3, 5)), Memb("late", (Var("T"),))))
        assert weight_eval(w, None, kb) == F(3, 5)

    def test_max(self):
        assert weight_eval(Max((Deg(F(1, 5)), Deg(F(1, 2))))) == F(1, 2)


class TestClauses:
    def test_duplicates_merged(self):
        p = Literal("p", (Const("a"),))
        assert len(Clause((p, p))) == 1

    def test_empty(self):
        assert Clause().is_empty and str(Clause()) == "false"

    def test_tautology(self):
        p = Literal("p")
        assert Clause((p, p.negate())).is_tautology()

    def test_duplicate_labels_rejected(self):
        c = wclause([Literal("p")], "N", "1", "A")
        with pytest.raises(KBError):
            KnowledgeBase((c, c))

    def test_arity_clash(self):
        a = wclause([Literal("p", (Const("a"),))], "N", "1")
        b = wclause([Literal("p")], "N", "1")
        with pytest.raises(KBError, match="arity"):
            KnowledgeBase((a, b))
