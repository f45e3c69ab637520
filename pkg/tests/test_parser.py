import random
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from posslogic.engine import Rule, SearchConfig, refute
from posslogic.generators import random_ground_base
from posslogic.model import Const, Deg, Fn, Kind, Memb, Var
from posslogic.parser import (
    ParseError,
    parse_goal,
    parse_kb,
    parse_literal,
    parse_trace,
    serialize_kb,
    serialize_trace,
)


class TestClauseSyntax:
    def test_two_literal_clause(self):
        kb = parse_kb("clause ~comes(Bob,X) | ~comes(Mary,X) : N 1.0")
        (c,) = kb.clauses
        assert len(c.clause) == 2
        assert c.valuation.kind is Kind.N and c.weight == Deg(Fraction(1))
        assert {a for lit in c.clause for a in lit.args} == {Const("Bob"), Const("Mary"), Var("X")}

    def test_variable_weight(self):
        kb = parse_kb("fuzzy late linear (8,0) (12,1)\nclause ~arrives(John,m,T) | quiet(m) : N mu(late,T)")
        assert kb.clauses[0].weight == Memb("late", (Var("T"),))

    def test_empty_clause(self):
        (c,) = parse_kb("clause false : N 0.3").clauses
        assert c.clause.is_empty and c.valuation.degree == Fraction(3, 10)

    def test_label_and_possibility(self):
        (c,) = parse_kb("clause ~comes(a,m) | ~quiet(m) : P 0.8 as C3").clauses
        assert c.label == "C3" and c.kind is Kind.P

    def test_hyphenated_names_and_functions(self):
        (c,) = parse_kb("clause lives-in-Antarctica(father(Tweety)) : N 1").clauses
        (lit,) = c.clause
        assert lit.predicate == "lives-in-Antarctica"
        assert lit.args == (Fn("father", (Const("Tweety"),)),)

    def test_comments_and_fractions(self):
        kb = parse_kb("# header\nclause p : N 1/3  # trailing\n")
        assert kb.clauses[0].valuation.degree == Fraction(1, 3)

    def test_weight_forms(self):
        text = (
            "fuzzy phi table a=0.5 b=1\n"
            "domain d {a, b}\n"
            "clause q(Y) : N sup(T:d, min(mu(phi,T), max(0.2, charneg(~p(Y)))))\n"
            "clause r(Y) : N gate(0.3, min(0.2, 0.4, 0.5))\n"
        )
        kb = parse_kb(text)
        assert "sup(T:d" in str(kb.clauses[0].weight)


class TestGoals:
    def test_single(self):
        g = parse_goal("~quiet(m)")
        assert [str(x) for x in g.literals] == ["~quiet(m)"]

    def test_constant_goal(self):
        assert parse_goal("flies(Tweety)").literals[0].args == (Const("Tweety"),)

    def test_conjunction_shares_variable(self):
        g = parse_goal("p(X) & q(X)")
        assert len(g.literals) == 2 and not g.disjunctive
        assert all(lit.args == (Var("X"),) for lit in g.literals)

    def test_disjunctive_goal_must_be_ground(self):
        assert parse_goal("p(a) | q(b)").disjunctive
        with pytest.raises(ParseError):
            parse_goal("p(X) | q(b)")

    def test_mixed_separators(self):
        with pytest.raises(ParseError):
            parse_goal("p & q | r")


class TestErrors:
    @pytest.mark.parametrize(
        "text,line,col",
        [
            ("clause p : Q 1", 1, 12),
            ("clause p :\n N 2", 2, 4),
            ("clause p(a) : N 1\nclause p : N 1", 2, 1),
            ("clause p : N mu(nope, a)", 1, 1),
            ("clause p : N 1 $", 1, 16),
        ],
    )
    def test_spans(self, text, line, col):
        with pytest.raises(ParseError) as info:
            parse_kb(text)
        assert (info.value.span.line, info.value.span.column) == (line, col)

    @settings(max_examples=200, deadline=None)
    @given(st.text(alphabet="clause p q ( ) , | ~ : N P 0.5 1 false as X \n#{}", max_size=40))
    def test_error_span_in_bounds(self, text):
        try:
            parse_kb(text)
        except ParseError as exc:
            lines = text.split("\n")
            span = exc.span
            assert 1 <= span.line <= len(lines)
            assert 1 <= span.column <= len(lines[span.line - 1]) + 1


class TestRoundTrip:
    def test_bundled(self, load):
        for name in ("meeting", "meeting-updated", "tweety-antarctica", "extensions"):
            kb = load(name)
            assert parse_kb(serialize_kb(kb)) == kb

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10_000))
    def test_random_bases(self, seed):
        kb = random_ground_base(random.Random(seed))
        assert parse_kb(serialize_kb(kb)) == kb

    def test_literal(self):
        assert str(parse_literal("~p(f(X), 3/4)")) == "~p(f(X),0.75)"


class TestTraceFormat:
    def test_meeting_trace(self, meeting):
        r = refute(meeting, parse_goal("~quiet(m)"), SearchConfig())
        text = serialize_trace(r.trace)
        last_step = text.splitlines()[-2]
        assert "clause=[] val=N 0.6" in last_step
        assert text.splitlines()[-1].startswith("RESULT val=N 0.6")
        assert "label=C2" in text

    def test_npi_tag(self, meeting):
        r = refute(meeting, parse_goal("~quiet(m)"), SearchConfig(collect_all_refutations=True))
        pi = [t for t in r.all if t.valuation.kind is Kind.P][0]
        assert any(s.rule is Rule.NPI for s in pi.steps)
        assert " N⊗Π " in serialize_trace(pi)

    def test_round_trip(self, meeting_updated):
        for g in ("quiet(m)", "~quiet(m)"):
            r = refute(meeting_updated, parse_goal(g), SearchConfig())
            text = serialize_trace(r.trace)
            assert serialize_trace(parse_trace(text)) == text
