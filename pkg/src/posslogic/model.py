"""Terms, clauses, weight expressions and valuations.

Everything here is an immutable value. Degrees are exact ``Fraction``s so
that mins, maxes and the ``a + b > 1`` test of the necessity/possibility
rule never suffer from rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Union


class KBError(Exception):
    """Invalid knowledge-base content, or a weight that cannot be evaluated."""


ZERO = Fraction(0)
ONE = Fraction(1)


def degree(x) -> Fraction:
    """Coerce ``x`` to an exact degree in [0, 1].

    Floats go through their shortest repr, so ``degree(0.7) == Fraction(7, 10)``.
    """
    if isinstance(x, float):
        x = repr(x)
    d = Fraction(x)
    if not ZERO <= d <= ONE:
        raise KBError(f"degree {x} outside [0, 1]")
    return d


def format_number(x) -> str:
    """Shortest exact decimal for a rational, or ``p/q`` if none exists."""
    x = Fraction(x)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{x.numerator}/{x.denominator}"
    places = max(twos, fives)
    if places == 0:
        return str(x.numerator)
    scaled = abs(x.numerator * 10**places // x.denominator)
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if x < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


# ---------------------------------------------------------------- terms

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name

    def substitute(self, theta: Mapping[str, "Term"]) -> "Term":
        return theta.get(self.name, self)

    def variables(self) -> Iterable[str]:
        yield self.name

    @property
    def is_ground(self) -> bool:
        return False


@dataclass(frozen=True)
class Const:
    """A constant: a name, or an exact number (``Fraction``)."""

    value: Union[str, Fraction]

    def __str__(self):
        if isinstance(self.value, Fraction):
            return format_number(self.value)
        return self.value

    @property
    def is_numeric(self) -> bool:
        return isinstance(self.value, Fraction)

    def substitute(self, theta):
        return self

    def variables(self):
        return iter(())

    @property
    def is_ground(self) -> bool:
        return True


@dataclass(frozen=True)
class Fn:
    functor: str
    args: tuple

    def __str__(self):
        return f"{self.functor}({','.join(map(str, self.args))})"

    def substitute(self, theta):
        return Fn(self.functor, tuple(a.substitute(theta) for a in self.args))

    def variables(self):
        for a in self.args:
            yield from a.variables()

    @property
    def is_ground(self) -> bool:
        return all(a.is_ground for a in self.args)


Term = Union[Var, Const, Fn]


def term_sort_key(t: Term) -> tuple:
    # numbers before names so that 8 < 11 < 12 sort numerically
    if isinstance(t, Const) and t.is_numeric:
        return (0, t.value, "")
    return (1, 0, str(t))


@dataclass(frozen=True)
class Literal:
    predicate: str
    args: tuple = ()
    positive: bool = True

    def __str__(self):
        return self.text

    @cached_property
    def text(self) -> str:
        sign = "" if self.positive else "~"
        if not self.args:
            return f"{sign}{self.predicate}"
        return f"{sign}{self.predicate}({','.join(map(str, self.args))})"

    def negate(self) -> "Literal":
        return Literal(self.predicate, self.args, not self.positive)

    def atom(self) -> "Literal":
        return self if self.positive else self.negate()

    def substitute(self, theta: Mapping[str, Term]) -> "Literal":
        if not theta:
            return self
        return Literal(self.predicate, tuple(a.substitute(theta) for a in self.args), self.positive)

    def variables(self) -> Iterable[str]:
        for a in self.args:
            yield from a.variables()

    @property
    def is_ground(self) -> bool:
        return all(a.is_ground for a in self.args)

    @property
    def signature(self) -> tuple:
        return (self.predicate, len(self.args))


@dataclass(frozen=True)
class Clause:
    """A set of literals, kept as a canonically sorted tuple."""

    literals: tuple = ()

    def __post_init__(self):
        lits = {lit.text: lit for lit in self.literals}
        object.__setattr__(self, "literals", tuple(lits[k] for k in sorted(lits)))

    @classmethod
    def of(cls, *lits: Literal) -> "Clause":
        return cls(lits)

    def __str__(self):
        if not self.literals:
            return "false"
        return " | ".join(lit.text for lit in self.literals)

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def substitute(self, theta) -> "Clause":
        if not theta:
            return self
        return Clause(tuple(lit.substitute(theta) for lit in self.literals))

    def variables(self) -> frozenset:
        return frozenset(v for lit in self.literals for v in lit.variables())

    @property
    def is_ground(self) -> bool:
        return all(lit.is_ground for lit in self.literals)

    def is_tautology(self) -> bool:
        texts = {lit.text for lit in self.literals}
        return any(lit.positive and lit.negate().text in texts for lit in self.literals)

    def without(self, lit: Literal) -> tuple:
        return tuple(x for x in self.literals if x != lit)


# ---------------------------------------------------------- weight exprs

@dataclass(frozen=True)
class Deg:
    """A constant degree."""

    value: Fraction

    def __str__(self):
        return format_number(self.value)

    def substitute(self, theta):
        return self

    def free_vars(self) -> frozenset:
        return frozenset()


@dataclass(frozen=True)
class Memb:
    """Fuzzy membership ``mu(fn, args...)``."""

    fn: str
    args: tuple

    def __str__(self):
        return f"mu({self.fn},{','.join(map(str, self.args))})"

    def substitute(self, theta):
        return Memb(self.fn, tuple(a.substitute(theta) for a in self.args))

    def free_vars(self):
        return frozenset(v for a in self.args for v in a.variables())


@dataclass(frozen=True)
class CharNeg:
    """Crisp characteristic weight: 1 when ``literal`` is false under the hypotheses, else 0.

    For a positive literal ``q(x)`` this is the characteristic function of
    ``not q``; for ``~p(x)`` it is that of ``p``.
    """

    literal: Literal

    def __str__(self):
        return f"charneg({self.literal})"

    def substitute(self, theta):
        return CharNeg(self.literal.substitute(theta))

    def free_vars(self):
        return frozenset(self.literal.variables())


@dataclass(frozen=True)
class Min:
    left: "WeightExpr"
    right: "WeightExpr"

    def __str__(self):
        return f"min({self.left},{self.right})"

    def substitute(self, theta):
        return Min(self.left.substitute(theta), self.right.substitute(theta))

    def free_vars(self):
        return self.left.free_vars() | self.right.free_vars()


@dataclass(frozen=True)
class Max:
    items: tuple

    def __str__(self):
        return f"max({','.join(map(str, self.items))})"

    def substitute(self, theta):
        return Max(tuple(w.substitute(theta) for w in self.items))

    def free_vars(self):
        return frozenset().union(*(w.free_vars() for w in self.items))


@dataclass(frozen=True)
class Gate:
    """Deferred necessity/possibility combination: ``pos`` if ``nec + pos > 1`` else 0."""

    nec: "WeightExpr"
    pos: "WeightExpr"

    def __str__(self):
        return f"gate({self.nec},{self.pos})"

    def substitute(self, theta):
        return Gate(self.nec.substitute(theta), self.pos.substitute(theta))

    def free_vars(self):
        return self.nec.free_vars() | self.pos.free_vars()


@dataclass(frozen=True)
class Sup:
    var: str
    domain: str
    body: "WeightExpr"

    def __str__(self):
        return f"sup({self.var}:{self.domain},{self.body})"

    def substitute(self, theta):
        if self.var in theta:
            theta = {k: v for k, v in theta.items() if k != self.var}
        return Sup(self.var, self.domain, self.body.substitute(theta))

    def free_vars(self):
        return self.body.free_vars() - {self.var}


WeightExpr = Union[Deg, Memb, CharNeg, Min, Max, Gate, Sup]


def charneg_literals(w: WeightExpr) -> list:
    """All ``CharNeg`` literals occurring in ``w``, in order of appearance."""
    if isinstance(w, CharNeg):
        return [w.literal]
    if isinstance(w, Min):
        return charneg_literals(w.left) + charneg_literals(w.right)
    if isinstance(w, Max):
        return [lit for item in w.items for lit in charneg_literals(item)]
    if isinstance(w, Gate):
        return charneg_literals(w.nec) + charneg_literals(w.pos)
    if isinstance(w, Sup):
        return charneg_literals(w.body)
    return []


# ------------------------------------------------------------ valuations

class Kind(enum.Enum):
    N = "N"
    P = "P"


@dataclass(frozen=True)
class Valuation:
    kind: Kind
    weight: WeightExpr

    def __str__(self):
        return f"{self.kind.value} {self.weight}"

    @classmethod
    def nec(cls, d) -> "Valuation":
        return cls(Kind.N, Deg(degree(d)))

    @classmethod
    def pos(cls, d) -> "Valuation":
        return cls(Kind.P, Deg(degree(d)))

    @property
    def is_ground(self) -> bool:
        return isinstance(self.weight, Deg)

    @property
    def degree(self) -> Fraction:
        if not isinstance(self.weight, Deg):
            raise KBError(f"unresolved weight variable in {self.weight}")
        return self.weight.value

    def rank(self) -> tuple:
        """Sort key realising the valuation order.

        (P a) with a < 1 sit in tier 0, the boundary (N 0) ~ (P 1) in tier 1,
        (N b) with b > 0 in tier 2.
        """
        d = self.degree
        if self.kind is Kind.P:
            return (1, ZERO) if d == ONE else (0, d)
        return (1, ZERO) if d == ZERO else (2, d)


def valuation_cmp(v1: Valuation, v2: Valuation) -> int:
    """Three-way comparison of ground valuations: -1, 0 or 1."""
    r1, r2 = v1.rank(), v2.rank()
    return (r1 > r2) - (r1 < r2)


def combine_nn(a: Fraction, b: Fraction) -> Fraction:
    return min(a, b)


def combine_npi(a: Fraction, b: Fraction) -> Fraction:
    """``a`` is the necessity side, ``b`` the possibility side."""
    return b if a + b > ONE else ZERO


def dual(a: Fraction) -> Fraction:
    """Possibility of p from the necessity of not-p, and conversely."""
    return ONE - a


# ------------------------------------------------------------- clauses

@dataclass(frozen=True)
class WeightedClause:
    clause: Clause
    valuation: Valuation
    label: Optional[str] = None

    def __str__(self):
        tag = f"{self.label}: " if self.label else ""
        return f"{tag}({self.clause}, {self.valuation})"

    @property
    def kind(self) -> Kind:
        return self.valuation.kind

    @property
    def weight(self) -> WeightExpr:
        return self.valuation.weight

    def variables(self) -> frozenset:
        return self.clause.variables() | self.weight.free_vars()

    def name(self) -> str:
        return self.label or str(self.clause)


def wclause(lits, kind: str, w, label=None) -> WeightedClause:
    """Shorthand constructor used in tests and scripts."""
    if not isinstance(w, (Deg, Memb, CharNeg, Min, Max, Gate, Sup)):
        w = Deg(degree(w))
    return WeightedClause(Clause(tuple(lits)), Valuation(Kind(kind), w), label)


# ------------------------------------------------------- fuzzy & domains

@dataclass(frozen=True)
class FuzzyDef:
    """Membership function: piecewise linear over breakpoints, or a finite table.

    Linear shapes extend constantly beyond the first and last breakpoint.
    Table keys are tuples of ``Const``.
    """

    name: str
    points: tuple = ()
    table: tuple = ()

    def __post_init__(self):
        if bool(self.points) == bool(self.table):
            raise KBError(f"fuzzy {self.name}: give either breakpoints or a table")
        if self.points:
            if len(self.points) < 2:
                raise KBError(f"fuzzy {self.name}: needs at least two breakpoints")
            xs = [x for x, _ in self.points]
            if any(a >= b for a, b in zip(xs, xs[1:])):
                raise KBError(f"fuzzy {self.name}: breakpoints must strictly increase")
            ys = [y for _, y in self.points]
        else:
            ys = [y for _, y in self.table]
            keys = [k for k, _ in self.table]
            if len(set(keys)) != len(keys):
                raise KBError(f"fuzzy {self.name}: duplicate table key")
            if len({len(k) for k in keys}) != 1:
                raise KBError(f"fuzzy {self.name}: table keys of mixed arity")
        if any(not ZERO <= y <= ONE for y in ys):
            raise KBError(f"fuzzy {self.name}: membership values must lie in [0, 1]")

    @property
    def is_linear(self) -> bool:
        return bool(self.points)

    @property
    def arity(self) -> int:
        return 1 if self.points else len(self.table[0][0])

    @cached_property
    def _lookup(self) -> dict:
        return dict(self.table)

    def breakpoints(self) -> list:
        return [x for x, _ in self.points]

    def __call__(self, *args: Term) -> Fraction:
        if self.points:
            (arg,) = args
            if not (isinstance(arg, Const) and arg.is_numeric):
                raise KBError(f"mu({self.name}, {arg}): argument must be numeric")
            return self.at(arg.value)
        try:
            return self._lookup[tuple(args)]
        except KeyError:
            raise KBError(f"mu({self.name}, {','.join(map(str, args))}) is not tabled") from None

    def at(self, x: Fraction) -> Fraction:
        pts = self.points
        if x <= pts[0][0]:
            return pts[0][1]
        if x >= pts[-1][0]:
            return pts[-1][1]
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        raise AssertionError("unreachable")


HERBRAND = "herbrand"


@dataclass(frozen=True)
class Domain:
    """Carrier of a variable: a finite set of constants, or a real interval."""

    name: str
    elements: tuple = ()
    interval: Optional[tuple] = None

    def __post_init__(self):
        if self.interval is not None:
            lo, hi = self.interval
            if lo > hi:
                raise KBError(f"domain {self.name}: empty range")

    @property
    def is_finite(self) -> bool:
        return self.interval is None


def var_base(name: str) -> str:
    """Name of a variable before any renaming suffix (``T_12`` -> ``T``)."""
    return name.split("_", 1)[0]


@dataclass(frozen=True)
class KnowledgeBase:
    clauses: tuple = ()
    fuzzy: Mapping[str, FuzzyDef] = field(default_factory=dict)
    domains: Mapping[str, Domain] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        labels = [c.label for c in self.clauses if c.label]
        dup = {x for x in labels if labels.count(x) > 1}
        if dup:
            raise KBError(f"duplicate clause labels: {', '.join(sorted(dup))}")
        check_signatures(self)

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)

    def with_clauses(self, extra: Iterable[WeightedClause]) -> "KnowledgeBase":
        return KnowledgeBase(self.clauses + tuple(extra), self.fuzzy, self.domains)

    def replace_clauses(self, clauses: Iterable[WeightedClause]) -> "KnowledgeBase":
        return KnowledgeBase(tuple(clauses), self.fuzzy, self.domains)

    def necessity_part(self) -> "KnowledgeBase":
        return self.replace_clauses(c for c in self.clauses if c.kind is Kind.N)

    def by_label(self, label: str) -> WeightedClause:
        for c in self.clauses:
            if c.label == label:
                return c
        raise KeyError(label)

    @cached_property
    def constants(self) -> tuple:
        """Constants occurring anywhere in clauses or their weights, sorted."""
        found = {}

        def visit_term(t):
            if isinstance(t, Const):
                found[t] = None
            elif isinstance(t, Fn):
                for a in t.args:
                    visit_term(a)

        def visit_weight(w):
            if isinstance(w, Memb):
                for a in w.args:
                    visit_term(a)
            elif isinstance(w, CharNeg):
                for a in w.literal.args:
                    visit_term(a)
            elif isinstance(w, Min):
                visit_weight(w.left)
                visit_weight(w.right)
            elif isinstance(w, Max):
                for item in w.items:
                    visit_weight(item)
            elif isinstance(w, Gate):
                visit_weight(w.nec)
                visit_weight(w.pos)
            elif isinstance(w, Sup):
                visit_weight(w.body)

        for c in self.clauses:
            for lit in c.clause:
                for a in lit.args:
                    visit_term(a)
            visit_weight(c.weight)
        return tuple(sorted(found, key=term_sort_key))

    def domain(self, name: str) -> Domain:
        if name in self.domains:
            return self.domains[name]
        if name == HERBRAND:
            return Domain(HERBRAND, self.constants)
        raise KBError(f"undeclared domain {name}")

    def domain_for(self, var: str) -> Domain:
        """Domain governing a variable: a declared domain named like the
        variable's base (case-insensitive), else the Herbrand universe."""
        base = var_base(var).lower()
        for name, dom in self.domains.items():
            if name.lower() == base:
                return dom
        return self.domain(HERBRAND)

    def has_declared_domain(self, var: str) -> bool:
        base = var_base(var).lower()
        return any(name.lower() == base for name in self.domains)

    def grounding_values(self, dom: Domain) -> tuple:
        """Constants a variable over ``dom`` takes in ground instances.

        Intervals contribute the numeric constants of the base that fall
        inside them.
        """
        if dom.is_finite:
            return dom.elements
        lo, hi = dom.interval
        return tuple(c for c in self.constants if c.is_numeric and lo <= c.value <= hi)


def check_signatures(kb: KnowledgeBase) -> None:
    """Arity consistency for predicates, functors and memberships; declared names."""
    preds: dict = {}
    fns: dict = {}

    def term(t):
        if isinstance(t, Fn):
            if fns.setdefault(t.functor, len(t.args)) != len(t.args):
                raise KBError(f"arity clash for function {t.functor}")
            for a in t.args:
                term(a)

    def literal(lit):
        if preds.setdefault(lit.predicate, len(lit.args)) != len(lit.args):
            raise KBError(f"arity clash for predicate {lit.predicate}")
        for a in lit.args:
            term(a)

    def weight(w):
        if isinstance(w, Memb):
            fd = kb.fuzzy.get(w.fn)
            if fd is None:
                raise KBError(f"undeclared fuzzy function {w.fn}")
            if fd.arity != len(w.args):
                raise KBError(f"mu({w.fn}) expects {fd.arity} argument(s)")
            for a in w.args:
                term(a)
        elif isinstance(w, CharNeg):
            literal(w.literal)
        elif isinstance(w, Min):
            weight(w.left)
            weight(w.right)
        elif isinstance(w, Max):
            for item in w.items:
                weight(item)
        elif isinstance(w, Gate):
            weight(w.nec)
            weight(w.pos)
        elif isinstance(w, Sup):
            if w.domain not in kb.domains and w.domain != HERBRAND:
                raise KBError(f"undeclared domain {w.domain}")
            weight(w.body)

    for c in kb.clauses:
        for lit in c.clause:
            literal(lit)
        weight(c.weight)


# ------------------------------------------------------------ evaluation

Hyp = Mapping[Literal, Optional[bool]]


def weight_eval(
    w: WeightExpr,
    binding: Optional[Mapping[str, Term]] = None,
    kb: Optional[KnowledgeBase] = None,
    hyp: Optional[Hyp] = None,
) -> Fraction:
    """Evaluate a weight to a degree under a variable binding.

    ``hyp`` maps ground atoms to True/False; it is only consulted by
    ``CharNeg``. Raises ``KBError`` on unbound variables, unknown fuzzy
    functions or unassigned hypothesis atoms.
    """
    if binding:
        w = w.substitute(binding)
    return _eval(w, kb if kb is not None else KnowledgeBase(), hyp or {})


def _eval(w, kb: KnowledgeBase, hyp) -> Fraction:
    if isinstance(w, Deg):
        return w.value
    if isinstance(w, Memb):
        for a in w.args:
            if not a.is_ground:
                raise KBError(f"unbound variable in {w}")
        fd = kb.fuzzy.get(w.fn)
        if fd is None:
            raise KBError(f"undeclared fuzzy function {w.fn}")
        return fd(*w.args)
    if isinstance(w, CharNeg):
        lit = w.literal
        if not lit.is_ground:
            raise KBError(f"unbound variable in {w}")
        value = hyp.get(lit.atom())
        if value is None:
            raise KBError(f"hypothesis {lit.atom()} is unassigned")
        holds = value if lit.positive else not value
        return ZERO if holds else ONE
    if isinstance(w, Min):
        return min(_eval(w.left, kb, hyp), _eval(w.right, kb, hyp))
    if isinstance(w, Max):
        return max((_eval(x, kb, hyp) for x in w.items), default=ZERO)
    if isinstance(w, Gate):
        return combine_npi(_eval(w.nec, kb, hyp), _eval(w.pos, kb, hyp))
    if isinstance(w, Sup):
        dom = kb.domain(w.domain)
        if dom.is_finite:
            return max(
                (_eval(w.body.substitute({w.var: e}), kb, hyp) for e in dom.elements),
                default=ZERO,
            )
        return sup_over_interval(w.var, dom.interval, w.body, kb, hyp)
    raise TypeError(f"not a weight expression: {w!r}")


def sup_over_interval(var: str, interval: tuple, body, kb: KnowledgeBase, hyp=None) -> Fraction:
    """Exact supremum of ``body`` for ``var`` ranging over a closed interval.

    The body is a min/max combination of constants and piecewise-linear
    memberships of ``var``, hence itself piecewise linear: its maximum lies
    at an endpoint, a breakpoint, or a crossing of two leaf functions.
    """
    hyp = hyp or {}
    lo, hi = interval
    leaves: list = []

    def collect(w):
        if isinstance(w, (Min,)):
            collect(w.left)
            collect(w.right)
        elif isinstance(w, Max):
            for item in w.items:
                collect(item)
        elif var in w.free_vars():
            if not (isinstance(w, Memb) and w.args == (Var(var),)):
                raise KBError(f"cannot take sup over an interval of {w}")
            fd = kb.fuzzy.get(w.fn)
            if fd is None or not fd.is_linear:
                raise KBError(f"sup over an interval needs a piecewise-linear mu({w.fn})")
            leaves.append(w)
        else:
            leaves.append(w)

    collect(body)
    marks = {lo, hi}
    for leaf in leaves:
        if isinstance(leaf, Memb) and leaf.args == (Var(var),):
            marks.update(x for x in kb.fuzzy[leaf.fn].breakpoints() if lo < x < hi)
    marks = sorted(marks)

    def leaf_at(leaf, x):
        return _eval(leaf.substitute({var: Const(x)}), kb, hyp)

    candidates = set(marks)
    for a, b in zip(marks, marks[1:]):
        ya = [leaf_at(leaf, a) for leaf in leaves]
        yb = [leaf_at(leaf, b) for leaf in leaves]
        for i in range(len(leaves)):
            for j in range(i + 1, len(leaves)):
                da, db = ya[i] - ya[j], yb[i] - yb[j]
                if da * db < 0:
                    candidates.add(a + (b - a) * da / (da - db))
    return max(_eval(body.substitute({var: Const(x)}), kb, hyp) for x in candidates)


# ----------------------------------------------------------------- goals

GOAL_LABEL = "goal"


@dataclass(frozen=True)
class Goal:
    """A query: a conjunction of literals (free variables existential) or,
    with ``disjunctive=True``, a ground clause."""

    literals: tuple
    disjunctive: bool = False

    def __post_init__(self):
        if not self.literals:
            raise KBError("a goal needs at least one literal")
        if self.disjunctive and len(self.literals) > 1:
            if not all(lit.is_ground for lit in self.literals):
                raise KBError("disjunctive goals must be ground")

    def __str__(self):
        sep = " | " if self.disjunctive else " & "
        return sep.join(map(str, self.literals))

    def negation_clauses(self) -> tuple:
        """The refutation assumptions, each weighted (N 1)."""
        one = Valuation(Kind.N, Deg(ONE))
        if self.disjunctive or len(self.literals) == 1:
            return tuple(
                WeightedClause(Clause((lit.negate(),)), one, GOAL_LABEL if i == 0 else f"{GOAL_LABEL}{i}")
                for i, lit in enumerate(self.literals)
            )
        return (WeightedClause(Clause(tuple(lit.negate() for lit in self.literals)), one, GOAL_LABEL),)

    def assertion_clauses(self) -> tuple:
        """The goal itself, asserted with (N 1)."""
        one = Valuation(Kind.N, Deg(ONE))
        if self.disjunctive:
            return (WeightedClause(Clause(self.literals), one, GOAL_LABEL),)
        return tuple(
            WeightedClause(Clause((lit,)), one, GOAL_LABEL if i == 0 else f"{GOAL_LABEL}{i}")
            for i, lit in enumerate(self.literals)
        )

    def negated(self) -> "Goal":
        """Goal for the complementary statement (ground single literal or clause)."""
        if len(self.literals) == 1:
            return Goal((self.literals[0].negate(),))
        if self.disjunctive:
            return Goal(tuple(lit.negate() for lit in self.literals), disjunctive=False)
        return Goal(tuple(lit.negate() for lit in self.literals), disjunctive=True)
