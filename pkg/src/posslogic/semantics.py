"""Ground model-theoretic semantics for necessity-valued bases.

An interpretation ``I`` is a map from ground atoms to booleans.  A clause
weighted ``(N a)`` has fuzzy model membership 1 at ``I`` if ``I`` satisfies
it and ``1 - a`` otherwise; a base's membership is the minimum over its
clauses.  The consistency degree ``c(K)`` is the best membership over all
interpretations and ``Inc(K) = 1 - c(K)``.

Everything here is brute force on purpose: it is the oracle that the
resolution engine is checked against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence

from .model import (
    ONE,
    ZERO,
    Clause,
    Deg,
    Fn,
    KBError,
    Kind,
    KnowledgeBase,
    Literal,
    Valuation,
    WeightedClause,
    weight_eval,
)

DEFAULT_ATOM_CAP = 20

Interpretation = Mapping[Literal, bool]


@dataclass(frozen=True)
class GroundKB:
    """Ground N-valued clauses with constant weights.

    Duplicate clauses are merged keeping the largest weight (the membership
    of a clause repeated with weights a <= b is min(1-a, 1-b) = 1-b), and
    clauses with weight 0 or a tautological body are dropped since their
    membership is identically 1.
    """

    clauses: tuple = ()

    def __post_init__(self):
        best: Dict[Clause, Fraction] = {}
        labels: Dict[Clause, Optional[str]] = {}
        for c in self.clauses:
            if c.kind is not Kind.N:
                raise KBError("possibility-valued clauses have no model semantics")
            if not c.clause.is_ground:
                raise KBError(f"clause {c.clause} is not ground")
            w = c.valuation.degree
            if w == ZERO or c.clause.is_tautology():
                continue
            if c.clause not in best or w > best[c.clause]:
                best[c.clause] = w
                labels[c.clause] = c.label
        merged = tuple(
            WeightedClause(cl, Valuation(Kind.N, Deg(w)), labels[cl]) for cl, w in best.items()
        )
        object.__setattr__(self, "clauses", merged)

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)

    @property
    def atoms(self) -> tuple:
        seen = {}
        for c in self.clauses:
            for lit in c.clause:
                seen[lit.atom()] = None
        return tuple(sorted(seen, key=lambda a: a.text))

    def plus(self, extra: Iterable[WeightedClause]) -> "GroundKB":
        return GroundKB(self.clauses + tuple(extra))


def ground_clause(c: WeightedClause, kb: KnowledgeBase) -> list:
    """All ground instances of ``c`` over the domains of its variables."""
    if c.kind is not Kind.N:
        raise KBError(f"clause {c.name()} is possibility-valued; no model semantics")
    for lit in c.clause:
        if any(isinstance(a, Fn) for a in lit.args):
            raise KBError(f"function symbols in {c.name()}: Herbrand universe is infinite")
    names = sorted(c.clause.variables())
    loose = c.weight.free_vars() - set(names)
    if loose:
        raise KBError(f"weight of {c.name()} mentions variables outside the clause")
    # interval domains contribute only the values the base names: the
    # atoms at unnamed points occur nowhere else, so they are pure
    pools = [kb.grounding_values(kb.domain_for(v)) for v in names]
    for v, pool in zip(names, pools):
        if not pool and not kb.has_declared_domain(v):
            raise KBError(f"empty Herbrand universe for variable {v} of {c.name()}")
    out = []
    for values in itertools.product(*pools):
        binding = dict(zip(names, values))
        w = weight_eval(c.weight, binding, kb)
        out.append(WeightedClause(c.clause.substitute(binding), Valuation(Kind.N, Deg(w)), c.label))
    return out


def ground_kb(kb: KnowledgeBase) -> GroundKB:
    """Herbrand grounding; raises ``KBError`` on P-clauses or function symbols."""
    out = []
    for c in kb.clauses:
        out.extend(ground_clause(c, kb))
    return GroundKB(tuple(out))


# ----------------------------------------------------------- memberships

def satisfies(interp: Interpretation, clause: Clause) -> bool:
    return any(bool(interp.get(lit.atom(), False)) == lit.positive for lit in clause)


def model_degree(interp: Interpretation, c: WeightedClause) -> Fraction:
    """Membership of ``interp`` in the fuzzy model set of ``c``."""
    if satisfies(interp, c.clause):
        return ONE
    return ONE - c.valuation.degree


def kb_degree(interp: Interpretation, g: Iterable[WeightedClause]) -> Fraction:
    return min((model_degree(interp, c) for c in g), default=ONE)


def interpretations(atoms: Sequence[Literal]) -> Iterator[Dict[Literal, bool]]:
    for bits in itertools.product((False, True), repeat=len(atoms)):
        yield dict(zip(atoms, bits))


# --------------------------------------------------- consistency degree

def _pure_literal_reduce(clauses: list) -> list:
    """Drop clauses containing a pure literal.

    Making the pure literal true satisfies those clauses without touching
    any other, so the best membership is unchanged.
    """
    clauses = list(clauses)
    while True:
        signs: Dict[Literal, set] = {}
        for c in clauses:
            for lit in c.clause:
                signs.setdefault(lit.atom(), set()).add(lit.positive)
        pure = {a for a, s in signs.items() if len(s) == 1}
        if not pure:
            return clauses
        clauses = [c for c in clauses if not any(lit.atom() in pure for lit in c.clause)]


def _min_violation(clauses: list, cap: int) -> Fraction:
    """min over interpretations of the largest weight of a violated clause.

    Depth-first over atoms; a clause is charged once its last atom is
    assigned, and branches already as bad as the incumbent are pruned.
    """
    atoms = sorted({lit.atom() for c in clauses for lit in c.clause}, key=lambda a: a.text)
    if len(atoms) > cap:
        raise KBError(f"{len(atoms)} atoms exceed the enumeration cap of {cap}")
    index = {a: i for i, a in enumerate(atoms)}
    due: list = [[] for _ in atoms]
    cost0 = ZERO
    for c in clauses:
        w = c.valuation.degree
        if c.clause.is_empty:
            cost0 = max(cost0, w)
            continue
        lits = [(index[lit.atom()], lit.positive) for lit in c.clause]
        due[max(i for i, _ in lits)].append((lits, w))

    best = [ONE]
    if not atoms:
        return cost0
    value = [False] * len(atoms)

    def dfs(i: int, cost: Fraction):
        if cost >= best[0]:
            return
        if i == len(atoms):
            best[0] = cost
            return
        for bit in (True, False):
            value[i] = bit
            c = cost
            for lits, w in due[i]:
                if w > c and not any(value[j] == pos for j, pos in lits):
                    c = w
            dfs(i + 1, c)

    dfs(0, cost0)
    return min(best[0], ONE)


def inconsistency_degree(g: GroundKB, cap: int = DEFAULT_ATOM_CAP, simplify: bool = True) -> Fraction:
    clauses = list(g.clauses)
    if simplify:
        clauses = _pure_literal_reduce(clauses)
    return _min_violation(clauses, cap)


def consistency_degree(g: GroundKB, cap: int = DEFAULT_ATOM_CAP, simplify: bool = True) -> Fraction:
    """``c(K) = max_I min_i mu_i(I)``; ``Inc(K) = 1 - c(K)``."""
    return ONE - inconsistency_degree(g, cap, simplify)


def classically_consistent(clauses: Iterable[Clause], cap: int = DEFAULT_ATOM_CAP) -> bool:
    """Satisfiability of unweighted ground clauses."""
    one = Valuation(Kind.N, Deg(ONE))
    g = [WeightedClause(c, one) for c in clauses if not c.is_tautology()]
    return _min_violation(_pure_literal_reduce(g), cap) == ZERO


def entails(g: GroundKB, c: WeightedClause, cap: int = DEFAULT_ATOM_CAP) -> bool:
    """Pointwise check ``mu_c(I) >= mu_K(I)`` for every interpretation."""
    if not c.clause.is_ground or c.kind is not Kind.N:
        raise KBError("entails expects a ground N-valued clause")
    atoms = set(g.atoms) | {lit.atom() for lit in c.clause}
    if len(atoms) > cap:
        raise KBError(f"{len(atoms)} atoms exceed the enumeration cap of {cap}")
    target = c.valuation.degree
    if target == ZERO or c.clause.is_tautology():
        return True
    # only interpretations falsifying c matter; there mu_c = 1 - target
    fixed = {lit.atom(): not lit.positive for lit in c.clause}
    rest = sorted(atoms - set(fixed), key=lambda a: a.text)
    for interp in interpretations(rest):
        interp.update(fixed)
        if kb_degree(interp, g) > ONE - target:
            return False
    return True


def best_necessity(g: GroundKB, clause: Clause, cap: int = DEFAULT_ATOM_CAP, simplify: bool = True) -> Fraction:
    """Largest ``a`` with ``(clause, N a)`` a consequence of ``g``.

    Equals the inconsistency degree of ``g`` plus each negated literal of
    ``clause`` asserted with certainty.
    """
    one = Valuation(Kind.N, Deg(ONE))
    neg = [WeightedClause(Clause((lit.negate(),)), one) for lit in clause]
    return inconsistency_degree(g.plus(neg), cap, simplify)


def semantic_inconsistency(kb: KnowledgeBase, cap: int = DEFAULT_ATOM_CAP) -> Fraction:
    """Inc of the necessity part of ``kb`` by grounding and enumeration."""
    return inconsistency_degree(ground_kb(kb.necessity_part()), cap)


__all__ = [
    "DEFAULT_ATOM_CAP",
    "GroundKB",
    "Interpretation",
    "best_necessity",
    "classically_consistent",
    "consistency_degree",
    "entails",
    "ground_clause",
    "ground_kb",
    "inconsistency_degree",
    "interpretations",
    "kb_degree",
    "model_degree",
    "satisfies",
    "semantic_inconsistency",
]
