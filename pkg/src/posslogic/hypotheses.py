"""Moving hypothesis literals from clauses into certainty weights.

A literal ``L`` removed from a clause is folded into its weight as
``charneg(L)``, the crisp function that is 1 exactly when ``L`` is false:
``(~p(X) | q(X), N a)`` becomes ``(~p(X), N min(a, charneg(q(X))))`` and
dropping ``~p(X)`` as well gives ``(false, N min(a, charneg(~p(X)),
charneg(q(X))))``.  All these forms carry the same information once the
hypothesis atoms are given truth values.

Refuting over the abstracted base keeps the weights symbolic, so one
search answers the query for every assignment of the hypotheses.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .engine import Refutation, SearchConfig, normalize, refute
from .model import (
    ONE,
    ZERO,
    CharNeg,
    Clause,
    Deg,
    Goal,
    KBError,
    KnowledgeBase,
    Literal,
    Min,
    Sup,
    Valuation,
    WeightedClause,
    charneg_literals,
    valuation_cmp,
    weight_eval,
)
from .unify import match_literal

log = logging.getLogger(__name__)

Pattern = Union[str, Literal]


def _as_pattern(p: Pattern) -> Literal:
    if isinstance(p, Literal):
        return p.atom()
    return Literal(p)


@dataclass(frozen=True)
class HypothesisSet:
    """Atoms the user decides on, plus a partial truth assignment.

    ``patterns`` are atoms; one without arguments stands for every atom of
    that predicate, one with variables for all of its instances.  The
    assignment maps ground atoms to True, False or None (open).
    """

    patterns: Tuple[Literal, ...] = ()
    assignment: Mapping[Literal, Optional[bool]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "patterns", tuple(_as_pattern(p) for p in self.patterns))
        norm = {}
        for atom, value in dict(self.assignment).items():
            if not atom.is_ground:
                raise KBError(f"assigned atom {atom} is not ground")
            if not atom.positive:
                atom, value = atom.atom(), (None if value is None else not value)
            if not self.covers(atom):
                raise KBError(f"{atom} is not a hypothesis")
            norm[atom] = value
        object.__setattr__(self, "assignment", norm)

    def covers(self, lit: Literal) -> bool:
        atom = lit.atom()
        for p in self.patterns:
            if not p.args and p.predicate == atom.predicate:
                return True
            if match_literal(p, atom, {}) is not None:
                return True
        return False

    def assign(self, assignment: Mapping[Literal, Optional[bool]]) -> "HypothesisSet":
        return HypothesisSet(self.patterns, assignment)


def abstract_literal(c: WeightedClause, lit: Literal) -> WeightedClause:
    """Remove ``lit`` from ``c`` and conjoin ``charneg(lit)`` into the weight."""
    if lit not in c.clause.literals:
        raise KBError(f"{lit} does not occur in {c.name()}")
    old = c.weight
    new = CharNeg(lit) if old == Deg(ONE) else Min(old, CharNeg(lit))
    return WeightedClause(Clause(c.clause.without(lit)), Valuation(c.kind, new), c.label)


def abstract_predicate(c: WeightedClause, pred: Pattern) -> WeightedClause:
    """Abstract every literal of ``c`` matching ``pred`` (name or atom pattern)."""
    hs = HypothesisSet((pred,))
    hits = [lit for lit in c.clause if hs.covers(lit)]
    if not hits:
        raise KBError(f"{pred} does not occur in {c.name()}")
    for lit in hits:
        c = abstract_literal(c, lit)
    return c


def abstract_kb(kb: KnowledgeBase, hyps: HypothesisSet) -> KnowledgeBase:
    """Abstract hypothesis literals everywhere.

    A unit clause that merely asserts a hypothesis literal is dropped: the
    hypothesis assignment now decides that atom.
    """
    out = []
    for c in kb.clauses:
        hits = [lit for lit in c.clause if hyps.covers(lit)]
        if not hits:
            out.append(c)
            continue
        if len(c.clause) == 1:
            log.info("dropping %s: it only asserts a hypothesis", c.name())
            continue
        for lit in hits:
            c = abstract_literal(c, lit)
        out.append(c)
    return kb.replace_clauses(out)


# ------------------------------------------------------------ answering

def _best(alternatives: Iterable[Valuation], kb, hyp) -> Optional[Valuation]:
    best = None
    for v in alternatives:
        d = weight_eval(v.weight, None, kb, hyp)
        if d == ZERO:
            continue
        cand = Valuation(v.kind, Deg(d))
        if best is None or valuation_cmp(cand, best) > 0:
            best = cand
    return best


def _worse(a: Optional[Valuation], b: Optional[Valuation]) -> Optional[Valuation]:
    if a is None or b is None:
        return None
    return a if valuation_cmp(a, b) <= 0 else b


@dataclass(frozen=True)
class ConditionalAnswer:
    """Answer to a goal as a function of the hypothesis assignment.

    ``alternatives`` are the kind-tagged symbolic valuations of the distinct
    refutations found; for a given assignment the answer is the best of
    them.  Atoms left open take the worse of their two values.
    """

    goal: Goal
    alternatives: Tuple[Valuation, ...]
    atoms: Tuple[Literal, ...]
    kb: KnowledgeBase = field(repr=False, compare=False)
    refutation: Optional[Refutation] = field(default=None, repr=False, compare=False)

    def evaluate(self, assignment: Mapping[Literal, Optional[bool]]) -> Optional[Valuation]:
        fixed = {a: v for a, v in assignment.items() if v is not None}
        open_atoms = [a for a in self.atoms if a not in fixed]
        result: Optional[Valuation] = None
        first = True
        for bits in itertools.product((True, False), repeat=len(open_atoms)):
            hyp = dict(fixed)
            hyp.update(zip(open_atoms, bits))
            v = _best(self.alternatives, self.kb, hyp)
            result = v if first else _worse(result, v)
            first = False
        return result

    def table(self, assignments: Sequence[Mapping[Literal, Optional[bool]]]) -> List[Optional[Valuation]]:
        return [self.evaluate(a) for a in assignments]


def hypothesize(
    kb: KnowledgeBase,
    hyps: HypothesisSet,
    goal: Goal,
    cfg: Optional[SearchConfig] = None,
) -> ConditionalAnswer:
    """Refute ``goal`` once over the abstracted base, keeping weights symbolic."""
    cfg = cfg or SearchConfig()
    abstracted = abstract_kb(kb, hyps)
    search_cfg = SearchConfig("best_first", cfg.max_steps, cfg.max_depth, True)
    r = refute(abstracted, goal, search_cfg)
    alts: Dict[str, Valuation] = {}
    for t in r.all:
        v = t.valuation
        w = v.weight
        # an empty clause with variables refutes every instance: take the sup
        for var in sorted(w.free_vars()):
            w = Sup(var, abstracted.domain_for(var).name, w)
        v = Valuation(v.kind, normalize(w, abstracted))
        if v.weight == Deg(ZERO):
            continue
        alts.setdefault(str(v), v)
    atoms: Dict[Literal, None] = {}
    for v in alts.values():
        for lit in charneg_literals(v.weight):
            if not lit.is_ground:
                raise KBError(f"hypothesis literal {lit} left non-ground in {v}")
            atoms[lit.atom()] = None
    ordered = tuple(sorted(atoms, key=lambda a: a.text))
    return ConditionalAnswer(goal, tuple(alts.values()), ordered, abstracted, r)


def answer_under(
    kb: KnowledgeBase,
    hyps: HypothesisSet,
    goal: Goal,
    cfg: Optional[SearchConfig] = None,
) -> Optional[Valuation]:
    """Direct route: refute with the (total) assignment folded into weights."""
    cfg = cfg or SearchConfig()
    abstracted = abstract_kb(kb, hyps)
    search_cfg = SearchConfig("best_first", cfg.max_steps, cfg.max_depth, True)
    r = refute(abstracted, goal, search_cfg, hyp=dict(hyps.assignment))
    return _best((t.valuation for t in r.all), abstracted, hyps.assignment)


__all__ = [
    "ConditionalAnswer",
    "HypothesisSet",
    "abstract_kb",
    "abstract_literal",
    "abstract_predicate",
    "answer_under",
    "hypothesize",
]
