"""Querying and revising partially inconsistent bases.

A base with inconsistency degree ``inc`` still supports conclusions whose
certainty exceeds ``inc``: the refutation behind such a conclusion only
uses clauses above the inconsistency level, which form a consistent
sub-base.  Conclusions at or below ``inc`` are reported but flagged
invalid.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .engine import Refutation, SearchConfig, Status, refute, refute_base
from .model import GOAL_LABEL, ZERO, Clause, Goal, KBError, KnowledgeBase, Literal, format_number
from .semantics import classically_consistent, ground_clause

log = logging.getLogger(__name__)

MAX_EXTENSION_CLAUSES = 16


def _necessity(r: Refutation) -> Fraction:
    return r.necessity if r.best is not None else ZERO


@dataclass(frozen=True)
class QueryVerdict:
    beta: Fraction
    inc: Fraction
    valid: bool
    support: Tuple[str, ...] = ()
    status: Status = Status.OPTIMAL
    refutation: Optional[Refutation] = field(default=None, compare=False, repr=False)

    def __str__(self):
        return (
            f"beta={format_number(self.beta)} inc={format_number(self.inc)} "
            f"valid={str(self.valid).lower()} support={','.join(self.support) or '-'}"
        )


def inconsistency_degree(kb: KnowledgeBase, cfg: Optional[SearchConfig] = None) -> Fraction:
    """Best empty-clause necessity derivable from the N-valued clauses alone."""
    return _necessity(refute_base(kb.necessity_part(), cfg))


def support_labels(r: Refutation) -> Tuple[str, ...]:
    """Names of the base clauses used by the best refutation."""
    if r.trace is None:
        return ()
    names = []
    for c in r.trace.inputs():
        if c.label and re.fullmatch(GOAL_LABEL + r"\d*", c.label):
            continue
        names.append(c.name())
    return tuple(dict.fromkeys(names))


def query(kb: KnowledgeBase, goal: Goal, cfg: Optional[SearchConfig] = None) -> QueryVerdict:
    """Certainty of ``goal`` and whether it stands above the inconsistency level."""
    r = refute(kb, goal, cfg)
    beta = _necessity(r)
    inc = inconsistency_degree(kb, cfg)
    return QueryVerdict(beta, inc, beta > inc, support_labels(r), r.status, r)


@dataclass(frozen=True)
class MinRelation:
    beta: Fraction  # certainty of the goal
    beta_prime: Fraction  # certainty of its negation
    inc: Fraction

    @property
    def holds(self) -> bool:
        return min(self.beta, self.beta_prime) == self.inc


def check_min_relation(kb: KnowledgeBase, goal: Goal, cfg: Optional[SearchConfig] = None) -> MinRelation:
    """``min(beta, beta') = inc`` where ``beta'`` comes from asserting the goal."""
    beta = _necessity(refute_base(kb.with_clauses(goal.negation_clauses()), cfg))
    beta_prime = _necessity(refute_base(kb.with_clauses(goal.assertion_clauses()), cfg))
    return MinRelation(beta, beta_prime, inconsistency_degree(kb, cfg))


# ------------------------------------------------------------ extensions

def _show(lit: Literal) -> str:
    return lit.text.replace("~", "¬", 1) if not lit.positive else lit.text


@dataclass(frozen=True)
class Extension:
    """A maximal consistent sub-base and the ground literals it entails."""

    kept: Tuple[str, ...]
    dropped: Tuple[str, ...]
    dropped_weights: Tuple[Fraction, ...]  # sorted descending
    consequences: Tuple[Literal, ...]
    rank: int = 0

    def __str__(self):
        return "{" + ", ".join(_show(lit) for lit in self.consequences) + "}"


def _entailed_literals(ground: list, atoms: list) -> Tuple[Literal, ...]:
    out = []
    for atom in atoms:
        for lit in (atom, atom.negate()):
            if not classically_consistent(ground + [Clause((lit.negate(),))]):
                out.append(lit)
    return tuple(out)


def preferred_extensions(kb: KnowledgeBase, cap: int = MAX_EXTENSION_CLAUSES) -> List[Extension]:
    """Maximal classically consistent sub-bases, best first.

    Sub-bases are compared on the weights of the clauses they drop, sorted
    in descending order and compared lexicographically: dropping only
    low-certainty clauses is preferred.  Extensions with equal keys share
    a rank.
    """
    clauses = kb.necessity_part().clauses
    if len(kb.clauses) != len(clauses):
        log.info("possibility-valued clauses ignored for extensions")
    if len(clauses) > cap:
        raise KBError(f"{len(clauses)} clauses exceed the extension cap of {cap}")
    grounds = [[g.clause for g in ground_clause(c, kb) if g.valuation.degree > 0] for c in clauses]
    weights = []
    for c in clauses:
        if not c.valuation.is_ground:
            raise KBError(f"extensions need constant weights ({c.name()})")
        weights.append(c.valuation.degree)
    atoms = sorted({lit.atom() for g in grounds for cl in g for lit in cl}, key=lambda a: a.text)

    n = len(clauses)
    maximal: List[frozenset] = []
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = frozenset(subset)
            if any(s < m for m in maximal):
                continue
            if classically_consistent([cl for i in subset for cl in grounds[i]]):
                maximal.append(s)

    out = []
    for s in maximal:
        kept = sorted(s)
        dropped = [i for i in range(n) if i not in s]
        ground = [cl for i in kept for cl in grounds[i]]
        out.append(
            Extension(
                tuple(clauses[i].name() for i in kept),
                tuple(clauses[i].name() for i in dropped),
                tuple(sorted((weights[i] for i in dropped), reverse=True)),
                _entailed_literals(ground, atoms),
            )
        )
    out.sort(key=lambda e: (e.dropped_weights, e.kept))
    ranked, rank, prev = [], 0, None
    for e in out:
        if e.dropped_weights != prev:
            rank += 1
            prev = e.dropped_weights
        ranked.append(Extension(e.kept, e.dropped, e.dropped_weights, e.consequences, rank))
    return ranked


__all__ = [
    "Extension",
    "MinRelation",
    "QueryVerdict",
    "check_min_relation",
    "inconsistency_degree",
    "preferred_extensions",
    "query",
    "support_labels",
]
