"""Weighted resolution and refutation search.

Two search engines share one given-clause saturation loop:

* ``alpha_cut`` strips the weights of every clause at or above a level and
  asks whether the classical clause set is refutable, trying levels from the
  highest down.  On bases whose clauses are all necessity-valued with
  constant weights the first refutable level is the optimum.
* ``best_first`` resolves the weighted clauses directly, always expanding
  the clause with the highest (optimistic) valuation.  It handles
  possibility-valued clauses and variable weights but its optimum is not
  certified.
"""

from __future__ import annotations

import enum
import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Mapping, Optional, Tuple

from .model import (
    ONE,
    ZERO,
    CharNeg,
    Clause,
    Deg,
    Domain,
    Gate,
    Goal,
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
    WeightedClause,
    charneg_literals,
    sup_over_interval,
    valuation_cmp,
    weight_eval,
)
from .unify import apply_subst, match_literal, mgu, renaming

log = logging.getLogger(__name__)

_EMPTY_KB = KnowledgeBase()


class Rule(enum.Enum):
    INPUT = "input"
    NN = "N⊗N"
    NPI = "N⊗Π"
    FACTOR = "factor"
    SUP = "sup"


class Status(enum.Enum):
    OPTIMAL = "optimal"
    UNVERIFIED = "unverified"
    INCOMPLETE = "incomplete"


class CutOutcome(enum.Enum):
    REFUTED = "refuted"
    SATURATED = "saturated"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ProofStep:
    id: int
    rule: Rule
    result: WeightedClause
    parents: tuple = ()
    unifier: Mapping = field(default_factory=dict, compare=True, hash=False)


@dataclass(frozen=True)
class ProofTrace:
    steps: tuple
    status: Status = Status.UNVERIFIED

    def __post_init__(self):
        if not self.steps or not self.steps[-1].result.clause.is_empty:
            raise ValueError("a proof trace ends with the empty clause")
        seen = set()
        for step in self.steps:
            if step.rule is Rule.INPUT and step.parents:
                raise ValueError("input steps have no parents")
            if any(p not in seen for p in step.parents):
                raise ValueError(f"step {step.id} refers to a later step")
            seen.add(step.id)

    @property
    def valuation(self) -> Valuation:
        return self.steps[-1].result.valuation

    def inputs(self) -> List[WeightedClause]:
        return [s.result for s in self.steps if s.rule is Rule.INPUT]


@dataclass(frozen=True)
class SearchConfig:
    engine: str = "alpha_cut"
    max_steps: int = 100_000
    max_depth: int = 64
    collect_all_refutations: bool = False

    def __post_init__(self):
        if self.engine not in ("alpha_cut", "best_first"):
            raise ValueError(f"unknown engine {self.engine!r}")
        if self.max_steps <= 0 or self.max_depth <= 0:
            raise ValueError("search limits must be positive")


@dataclass(frozen=True)
class Refutation:
    best: Optional[Valuation]
    trace: Optional[ProofTrace]
    all: tuple
    status: Status
    engine: str

    @property
    def necessity(self) -> Fraction:
        """Necessity degree certified for the goal (0 without an N refutation)."""
        if self.best is None or self.best.kind is not Kind.N:
            return ZERO
        return self.best.degree


# ------------------------------------------------------------- weights

def _decidable(w, hyp) -> bool:
    return all(lit.is_ground and hyp.get(lit.atom()) is not None for lit in charneg_literals(w))


def min_leaves(w) -> list:
    """Operands of a (nested) min; any other weight is its own leaf."""
    if isinstance(w, Min):
        return min_leaves(w.left) + min_leaves(w.right)
    return [w]


def canonical_min(items):
    """Min of ``items`` flattened, constants folded, repeats dropped and the
    symbolic operands sorted, so equal mins print identically."""
    leaves = [x for item in items for x in min_leaves(item)]
    const = min((x.value for x in leaves if isinstance(x, Deg)), default=ONE)
    if const == ZERO:
        return Deg(ZERO)
    rest = [x for _, x in sorted({str(x): x for x in leaves if not isinstance(x, Deg)}.items())]
    parts = ([Deg(const)] if const < ONE or not rest else []) + rest
    out = parts[0]
    for x in parts[1:]:
        out = Min(out, x)
    return out


def weight_geq(w1, w2) -> bool:
    """Sound test that ``w1 >= w2`` under every binding and assignment.

    Mins are compared as (constant, operand set): fewer operands and a
    larger constant can only give a larger value.
    """
    if isinstance(w1, Deg) and isinstance(w2, Deg):
        return w1.value >= w2.value
    c1 = min((x.value for x in min_leaves(w1) if isinstance(x, Deg)), default=ONE)
    c2 = min((x.value for x in min_leaves(w2) if isinstance(x, Deg)), default=ONE)
    s1 = {str(x) for x in min_leaves(w1) if not isinstance(x, Deg)}
    s2 = {str(x) for x in min_leaves(w2) if not isinstance(x, Deg)}
    return c1 >= c2 and s1 <= s2


def normalize(w, kb: KnowledgeBase = _EMPTY_KB, hyp=None):
    """Evaluate whatever is evaluable in ``w`` and simplify the rest."""
    hyp = hyp or {}
    if not w.free_vars() and _decidable(w, hyp):
        return Deg(weight_eval(w, None, kb, hyp))
    if isinstance(w, Min):
        return canonical_min(normalize(x, kb, hyp) for x in min_leaves(w))
    if isinstance(w, Max):
        items: list = []
        for item in (normalize(x, kb, hyp) for x in w.items):
            items.extend(item.items if isinstance(item, Max) else (item,))
        consts = [x.value for x in items if isinstance(x, Deg)]
        top = max(consts, default=ZERO)
        if top == ONE:
            return Deg(ONE)
        rest = list(dict.fromkeys(x for x in items if not isinstance(x, Deg)))
        if top > ZERO:
            rest.append(Deg(top))
        if not rest:
            return Deg(ZERO)
        return rest[0] if len(rest) == 1 else Max(tuple(rest))
    if isinstance(w, Gate):
        nec, pos = normalize(w.nec, kb, hyp), normalize(w.pos, kb, hyp)
        if isinstance(pos, Deg) and pos.value == ZERO:
            return pos
        if isinstance(nec, Deg) and nec.value == ONE:
            return pos
        if isinstance(nec, Deg) and nec.value == ZERO:
            return Deg(ZERO)
        return Gate(nec, pos)
    if isinstance(w, Sup):
        dom = kb.domain(w.domain)
        if dom.is_finite and w.body.free_vars() <= {w.var}:
            return eliminate_weight_var(w.body, w.var, dom, kb, hyp)
        return Sup(w.var, w.domain, normalize(w.body, kb, hyp))
    return w


def eliminate_weight_var(w, var: str, domain, kb: KnowledgeBase = _EMPTY_KB, hyp=None):
    """Replace ``var`` in ``w`` by its supremum over ``domain``.

    Finite domains expand into a max over instantiations, collapsing to a
    constant when everything is ground.  Intervals are solved exactly for
    piecewise-linear bodies; otherwise the ``Sup`` is kept symbolic.
    """
    hyp = hyp or {}
    if isinstance(domain, str):
        domain = kb.domain(domain)
    if domain.is_finite:
        return normalize(Max(tuple(w.substitute({var: e}) for e in domain.elements)), kb, hyp)
    if w.free_vars() <= {var} and _decidable(w, hyp):
        return Deg(sup_over_interval(var, domain.interval, w, kb, hyp))
    return Sup(var, domain.name, w)


def upper_bound(w, kb: KnowledgeBase = _EMPTY_KB, hyp=None) -> Fraction:
    """Optimistic value of a possibly symbolic weight, used to order the search."""
    hyp = hyp or {}
    if isinstance(w, Deg):
        return w.value
    if isinstance(w, Memb):
        if not w.free_vars():
            return weight_eval(w, None, kb, hyp)
        fd = kb.fuzzy[w.fn]
        return max(y for _, y in (fd.points or fd.table))
    if isinstance(w, CharNeg):
        return weight_eval(w, None, kb, hyp) if _decidable(w, hyp) else ONE
    if isinstance(w, Min):
        return min(upper_bound(w.left, kb, hyp), upper_bound(w.right, kb, hyp))
    if isinstance(w, Max):
        return max((upper_bound(x, kb, hyp) for x in w.items), default=ZERO)
    if isinstance(w, Gate):
        return upper_bound(w.pos, kb, hyp)
    if isinstance(w, Sup):
        return upper_bound(w.body, kb, hyp)
    raise TypeError(f"not a weight expression: {w!r}")


def optimistic_rank(v: Valuation, kb: KnowledgeBase = _EMPTY_KB, hyp=None) -> tuple:
    if isinstance(v.weight, Deg):
        return v.rank()
    return Valuation(v.kind, Deg(upper_bound(v.weight, kb, hyp))).rank()


def _domain_of_eliminated(var: str, theta: Mapping, kb: KnowledgeBase) -> Domain:
    # the variable may have been merged with others by the unifier; any of
    # them carrying a declared domain decides
    names = [var] + sorted(k for k, t in theta.items() if t == Var(var))
    for name in names:
        if kb.has_declared_domain(name):
            return kb.domain_for(name)
    return kb.domain_for(var)


def _close_weight(clause: Clause, weight, theta, kb, hyp):
    for v in sorted(weight.free_vars() - clause.variables()):
        weight = eliminate_weight_var(weight, v, _domain_of_eliminated(v, theta, kb), kb, hyp)
    return weight


# ----------------------------------------------------------- inferences

@dataclass(frozen=True)
class Inference:
    rule: Rule
    theta: dict
    result: WeightedClause
    # resolvent before its loose weight variables were eliminated, if that happened
    before_sup: Optional[WeightedClause] = None


def _resolve(c1, c2, lit1, lit2, kb, hyp) -> Optional[Inference]:
    if lit1.positive == lit2.positive or (c1.kind is Kind.P and c2.kind is Kind.P):
        return None
    theta = mgu(lit1, lit2)
    if theta is None:
        return None
    clause = Clause(
        tuple(x.substitute(theta) for x in c1.clause.without(lit1))
        + tuple(x.substitute(theta) for x in c2.clause.without(lit2))
    )
    w1, w2 = c1.weight.substitute(theta), c2.weight.substitute(theta)
    if c1.kind is Kind.N and c2.kind is Kind.N:
        kind, rule, weight = Kind.N, Rule.NN, Min(w1, w2)
    else:
        nec, pos = (w1, w2) if c1.kind is Kind.N else (w2, w1)
        kind, rule, weight = Kind.P, Rule.NPI, Gate(nec, pos)
    weight = normalize(weight, kb, hyp)
    closed = _close_weight(clause, weight, theta, kb, hyp)
    result = WeightedClause(clause, Valuation(kind, closed))
    before = None if closed == weight else WeightedClause(clause, Valuation(kind, weight))
    return Inference(rule, theta, result, before)


def resolve_nn(c1, c2, lit1, lit2, kb: KnowledgeBase = _EMPTY_KB, hyp=None) -> Optional[WeightedClause]:
    """Resolve two necessity-valued clauses on ``lit1`` in ``c1`` and ``lit2`` in ``c2``.

    The clauses must already be renamed apart.  Returns None when the
    literals are not complementary or do not unify.
    """
    if c1.kind is not Kind.N or c2.kind is not Kind.N:
        raise ValueError("resolve_nn needs two necessity-valued clauses")
    inf = _resolve(c1, c2, lit1, lit2, kb, hyp)
    return inf.result if inf else None


def resolve_npi(c_nec, c_pos, lit1, lit2, kb: KnowledgeBase = _EMPTY_KB, hyp=None) -> Optional[WeightedClause]:
    """Resolve a necessity-valued with a possibility-valued clause."""
    if c_nec.kind is not Kind.N or c_pos.kind is not Kind.P:
        raise ValueError("resolve_npi needs an N clause and a P clause")
    inf = _resolve(c_nec, c_pos, lit1, lit2, kb, hyp)
    return inf.result if inf else None


def resolvents(c1, c2, kb: KnowledgeBase = _EMPTY_KB, hyp=None) -> List[Inference]:
    """All binary resolvents of two clauses that are already renamed apart."""
    out = []
    for lit1 in c1.clause:
        for lit2 in c2.clause:
            if lit1.predicate == lit2.predicate and lit1.positive != lit2.positive:
                inf = _resolve(c1, c2, lit1, lit2, kb, hyp)
                if inf is not None:
                    out.append(inf)
    return out


def factors(c: WeightedClause, kb: KnowledgeBase = _EMPTY_KB, hyp=None) -> List[Inference]:
    out = []
    lits = c.clause.literals
    for i, a in enumerate(lits):
        for b in lits[i + 1:]:
            if a.positive != b.positive or a.predicate != b.predicate:
                continue
            theta = mgu(a, b)
            if theta is None:
                continue
            inst = apply_subst(c, theta)
            weight = normalize(inst.weight, kb, hyp)
            closed = _close_weight(inst.clause, weight, theta, kb, hyp)
            out.append(Inference(Rule.FACTOR, theta, WeightedClause(inst.clause, Valuation(c.kind, closed))))
    return out


def _theta_subsumption(lits1: tuple, lits2: tuple) -> Optional[dict]:
    def search(i, theta):
        if i == len(lits1):
            return theta
        for target in lits2:
            ext = match_literal(lits1[i], target, theta)
            if ext is not None:
                found = search(i + 1, ext)
                if found is not None:
                    return found
        return None

    return search(0, {})


def subsumes(c1: WeightedClause, c2: WeightedClause) -> bool:
    """``c1`` makes ``c2`` redundant: an instance of ``c1`` is a sub-clause of
    ``c2`` and its valuation is at least as strong.  Symbolic weights are
    compared with ``weight_geq`` and only within one kind."""
    if len(c1.clause) > len(c2.clause):
        return False
    theta = _theta_subsumption(c1.clause.literals, c2.clause.literals)
    if theta is None:
        return False
    w1 = c1.weight.substitute(theta)
    if isinstance(w1, Deg) and isinstance(c2.weight, Deg):
        return valuation_cmp(Valuation(c1.kind, w1), c2.valuation) >= 0
    return c1.kind is c2.kind and weight_geq(w1, c2.weight)


# ---------------------------------------------------------------- search

@dataclass
class _Node:
    id: int
    clause: WeightedClause
    rule: Rule
    parents: tuple
    theta: dict
    depth: int
    rank: tuple = (0, ZERO)
    removed: bool = False


def _masked(lit: Literal) -> str:
    def term(t):
        if isinstance(t, Var):
            return "_"
        if hasattr(t, "functor"):
            return f"{t.functor}({','.join(term(a) for a in t.args)})"
        return str(t)

    return ("" if lit.positive else "~") + lit.predicate + "(" + ",".join(term(a) for a in lit.args) + ")"


def variant_key(wc: WeightedClause) -> str:
    """Text identical for alpha-variants (up to ties in the literal order)."""
    order = sorted(wc.clause.literals, key=_masked)
    names: dict = {}
    for lit in order:
        for v in lit.variables():
            names.setdefault(v, Var(f"V{len(names)}"))
    for v in sorted(wc.weight.free_vars() - set(names)):
        names[v] = Var(f"V{len(names)}")
    body = " | ".join(lit.substitute(names).text for lit in order)
    return f"{body} @ {wc.kind.value} {wc.weight.substitute(names)}"


class _Search:
    """Given-clause saturation over weighted clauses."""

    def __init__(self, kb: KnowledgeBase, cfg: SearchConfig, hyp=None, *, collect=False, stop_at_first=False):
        self.kb = kb
        self.cfg = cfg
        self.hyp = hyp or {}
        self.collect = collect
        self.stop_at_first = stop_at_first
        self.nodes: List[_Node] = []
        self.passive: list = []
        self.active: List[int] = []
        self.index: dict = {}
        self.seen: set = set()
        self.empties: List[int] = []
        self.generated = 0

    # -- bookkeeping

    def _node(self, wc, rule, parents=(), theta=None, depth=0) -> _Node:
        nid = len(self.nodes)
        names = wc.variables()
        if names:
            wc = apply_subst(wc, renaming(names, nid))
        node = _Node(nid, wc, rule, tuple(parents), dict(theta or {}), depth)
        node.rank = optimistic_rank(wc.valuation, self.kb, self.hyp)
        self.nodes.append(node)
        return node

    def _push(self, node: _Node) -> None:
        heapq.heappush(self.passive, (-node.rank[0], -node.rank[1], len(node.clause.clause), node.id))

    def _admissible(self, wc: WeightedClause) -> bool:
        if isinstance(wc.weight, Deg) and wc.weight.value == ZERO:
            return False
        if wc.clause.is_tautology():
            return False
        key = variant_key(wc)
        if key in self.seen:
            return False
        self.seen.add(key)
        return True

    def _subsumes(self, a: WeightedClause, b: WeightedClause) -> bool:
        if self.collect and a.kind is not b.kind:
            return False
        return subsumes(a, b)

    def _forward_subsumed(self, wc: WeightedClause) -> bool:
        return any(
            not self.nodes[i].removed and self._subsumes(self.nodes[i].clause, wc) for i in self.active
        )

    def add_input(self, wc: WeightedClause) -> Optional[_Node]:
        weight = normalize(wc.weight, self.kb, self.hyp)
        wc = WeightedClause(wc.clause, Valuation(wc.kind, weight), wc.label)
        if not self._admissible(wc):
            return None
        node = self._node(wc, Rule.INPUT)
        self._push(node)
        return node

    def _activate(self, node: _Node) -> None:
        self.active.append(node.id)
        for lit in node.clause.clause:
            self.index.setdefault((lit.positive, lit.predicate), []).append(node.id)

    def _emit(self, inf: Inference, parents: tuple, depth: int) -> None:
        if depth > self.cfg.max_depth:
            return
        if not self._admissible(inf.result):
            return
        if self._forward_subsumed(inf.result):
            return
        if inf.before_sup is not None:
            pre = self._node(inf.before_sup, inf.rule, parents, inf.theta, depth)
            node = self._node(inf.result, Rule.SUP, (pre.id,), {}, depth)
        else:
            node = self._node(inf.result, inf.rule, parents, inf.theta, depth)
        self.generated += 1
        self._push(node)

    # -- main loop

    def run(self) -> bool:
        """Saturate; True if the search finished (optimum reached or nothing
        left to do), False if a resource limit cut it short."""
        while self.passive:
            *_, nid = heapq.heappop(self.passive)
            given = self.nodes[nid]
            if self._forward_subsumed(given.clause):
                continue
            if given.clause.clause.is_empty:
                self.empties.append(nid)
                if self.stop_at_first or (not self.collect and given.clause.valuation.is_ground):
                    return True
                self._activate(given)
                continue
            for i in self.active:
                other = self.nodes[i]
                if not other.removed and self._subsumes(given.clause, other.clause):
                    other.removed = True
            self._activate(given)
            depth = given.depth + 1
            for inf in factors(given.clause, self.kb, self.hyp):
                self._emit(inf, (nid,), depth)
            for lit in given.clause.clause:
                for oid in list(self.index.get((not lit.positive, lit.predicate), ())):
                    other = self.nodes[oid]
                    if other.removed:
                        continue
                    partner = other.clause
                    if oid == nid:
                        partner = apply_subst(partner, renaming(partner.variables(), f"{nid}b"))
                    for olit in partner.clause:
                        if olit.positive == lit.positive or olit.predicate != lit.predicate:
                            continue
                        inf = _resolve(given.clause, partner, lit, olit, self.kb, self.hyp)
                        if inf is not None:
                            self._emit(inf, (nid, oid) if oid != nid else (nid,), max(depth, other.depth + 1))
                    if self.generated >= self.cfg.max_steps:
                        return False
        return True

    # -- proofs

    def trace(self, nid: int, status: Status, revalue=None) -> ProofTrace:
        needed = set()
        stack = [nid]
        while stack:
            i = stack.pop()
            if i not in needed:
                needed.add(i)
                stack.extend(self.nodes[i].parents)
        order = sorted(needed)
        renum = {old: k + 1 for k, old in enumerate(order)}
        steps = []
        values: dict = {}
        for old in order:
            node = self.nodes[old]
            result = node.clause
            if revalue is not None:
                result = revalue(node, values)
                values[old] = result
            steps.append(
                ProofStep(renum[old], node.rule, result, tuple(renum[p] for p in node.parents), node.theta)
            )
        return ProofTrace(tuple(steps), status)


# ------------------------------------------------------------ refutation

def _constant_necessity_weights(kb: KnowledgeBase, hyp=None) -> Optional[list]:
    out = []
    for c in kb.clauses:
        if c.kind is not Kind.N:
            return None
        w = normalize(c.weight, kb, hyp)
        if not isinstance(w, Deg):
            return None
        out.append(w.value)
    return out


def _cut_search(kb, degrees, alpha, cfg) -> Tuple[_Search, dict, bool]:
    """Classical saturation of the clauses weighted at least ``alpha``."""
    search = _Search(kb, cfg, stop_at_first=True)
    originals: dict = {}
    for c, d in zip(kb.clauses, degrees):
        if d >= alpha and d > ZERO:
            node = search.add_input(WeightedClause(c.clause, Valuation(Kind.N, Deg(ONE)), c.label))
            if node is not None:
                originals[node.id] = d
    finished = search.run()
    return search, originals, finished


def saturate_alpha_cut(kb: KnowledgeBase, alpha, cfg: Optional[SearchConfig] = None) -> CutOutcome:
    """Is the classical clause set of the clauses valued at least (N alpha) refutable?"""
    cfg = cfg or SearchConfig()
    degrees = _constant_necessity_weights(kb)
    if degrees is None:
        raise KBError("alpha-cut saturation needs necessity-valued clauses with constant weights")
    search, _, finished = _cut_search(kb, degrees, Fraction(alpha), cfg)
    if search.empties:
        return CutOutcome.REFUTED
    return CutOutcome.SATURATED if finished else CutOutcome.UNKNOWN


def _alpha_cut(kb, degrees, cfg) -> Refutation:
    levels = sorted({d for d in degrees if d > ZERO}, reverse=True)
    incomplete = False
    for alpha in levels:
        search, originals, finished = _cut_search(kb, degrees, alpha, cfg)
        if search.empties:

            def revalue(node, values, originals=originals):
                if node.rule is Rule.INPUT:
                    d = originals[node.id]
                else:
                    d = min(values[p].valuation.degree for p in node.parents)
                return WeightedClause(node.clause.clause, Valuation(Kind.N, Deg(d)), node.clause.label)

            status = Status.INCOMPLETE if incomplete else Status.OPTIMAL
            trace = search.trace(search.empties[0], status, revalue)
            return Refutation(trace.valuation, trace, (trace,), status, "alpha_cut")
        if not finished:
            incomplete = True
    status = Status.INCOMPLETE if incomplete else Status.OPTIMAL
    return Refutation(None, None, (), status, "alpha_cut")


def _best_first(kb, cfg, hyp) -> Refutation:
    search = _Search(kb, cfg, hyp, collect=cfg.collect_all_refutations)
    for c in kb.clauses:
        search.add_input(c)
    finished = search.run()
    status = Status.UNVERIFIED if finished else Status.INCOMPLETE
    empties = [search.nodes[i] for i in search.empties]
    # ground valuations first by rank, symbolic ones after
    empties.sort(key=lambda n: (not n.clause.valuation.is_ground, tuple(-x for x in n.rank), n.id))
    traces = tuple(search.trace(n.id, status) for n in empties)
    ground = [t for t in traces if t.valuation.is_ground]
    best = ground[0] if ground else None
    return Refutation(best.valuation if best else None, best, traces, status, "best_first")


def refute_base(kb: KnowledgeBase, cfg: Optional[SearchConfig] = None, hyp=None) -> Refutation:
    """Best empty-clause valuation derivable from ``kb`` itself."""
    cfg = cfg or SearchConfig()
    if cfg.engine == "alpha_cut":
        degrees = _constant_necessity_weights(kb, hyp)
        if degrees is not None:
            return _alpha_cut(kb, degrees, cfg)
        log.info("base has possibility-valued clauses or variable weights; using best-first search")
    return _best_first(kb, cfg, hyp)


def refute(kb: KnowledgeBase, goal: Goal, cfg: Optional[SearchConfig] = None, hyp=None) -> Refutation:
    """Refute ``kb`` plus the negated goal; the best valuation lower-bounds the goal."""
    return refute_base(kb.with_clauses(goal.negation_clauses()), cfg, hyp)

