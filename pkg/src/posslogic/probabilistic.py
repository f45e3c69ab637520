"""Probability-bounded resolution, kept only for comparison.

Clauses are propositional and carry a lower bound on their probability.
Resolving ``(p | q) >= a`` with ``(~p | r) >= b`` gives
``(q | r) >= max(0, a + b - 1)``.  Saturating with this rule is sound but
not complete: it can miss the best bound a linear-programming reading of
the same constraints would give.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional

from .model import ONE, ZERO, Clause, KBError, Literal, degree, format_number


@dataclass(frozen=True)
class ProbClause:
    clause: Clause
    bound: Fraction

    def __post_init__(self):
        object.__setattr__(self, "bound", degree(self.bound))
        if not self.clause.is_ground or any(lit.args for lit in self.clause):
            raise KBError("probabilistic clauses must be propositional")

    def __str__(self):
        return f"{self.clause} >= {format_number(self.bound)}"


def prob_clause(lits: Iterable[str], bound) -> ProbClause:
    """``prob_clause(["~r", "q"], "0.7")`` shorthand."""
    out = []
    for text in lits:
        positive = not text.startswith("~")
        out.append(Literal(text.lstrip("~"), (), positive))
    return ProbClause(Clause(tuple(out)), degree(bound))


def resolve_prob(c1: ProbClause, c2: ProbClause, lit1: Literal, lit2: Literal) -> Optional[ProbClause]:
    """Resolve on complementary ``lit1`` in ``c1`` and ``lit2`` in ``c2``."""
    if lit1 not in c1.clause.literals or lit2 not in c2.clause.literals:
        raise KBError("resolved literals must belong to their clauses")
    if lit1.negate() != lit2:
        return None
    merged = Clause(c1.clause.without(lit1) + c2.clause.without(lit2))
    return ProbClause(merged, max(ZERO, c1.bound + c2.bound - ONE))


def saturate_prob(clauses: Iterable[ProbClause], max_rounds: int = 1000) -> Dict[Clause, Fraction]:
    """Close under the probabilistic rule, keeping the best bound per clause.

    Tautologies are dropped; bounds only grow, so the loop reaches a fixpoint
    once no bound improves.
    """
    best: Dict[Clause, Fraction] = {}
    for c in clauses:
        if c.clause not in best or c.bound > best[c.clause]:
            best[c.clause] = c.bound
    for _ in range(max_rounds):
        changed = False
        items = sorted(best.items(), key=lambda kv: str(kv[0]))
        for i, (a, wa) in enumerate(items):
            for b, wb in items[i:]:
                for lit in a:
                    if lit.negate() not in b.literals:
                        continue
                    r = resolve_prob(ProbClause(a, wa), ProbClause(b, wb), lit, lit.negate())
                    if r is None or r.clause.is_tautology() or r.bound == ZERO:
                        continue
                    if r.bound > best.get(r.clause, -ONE):
                        best[r.clause] = r.bound
                        changed = True
        if not changed:
            return best
    raise KBError("probabilistic saturation did not converge")


def prob_lower_bound(clauses: Iterable[ProbClause], target: Clause) -> Fraction:
    """Best bound on ``target`` certified by saturation.

    A derived clause whose literals are a subset of ``target`` bounds it
    from below, since its models are a subset of the target's.
    """
    best = ZERO
    for c, w in saturate_prob(clauses).items():
        if c.literals and set(c.literals) <= set(target.literals):
            best = max(best, w)
    return best


__all__ = ["ProbClause", "prob_clause", "prob_lower_bound", "resolve_prob", "saturate_prob"]
