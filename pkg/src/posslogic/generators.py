"""Seeded random instances for property checks and experiment scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .model import (
    Clause,
    Const,
    Deg,
    Domain,
    FuzzyDef,
    Goal,
    Kind,
    KnowledgeBase,
    Literal,
    Max,
    Memb,
    Min,
    Valuation,
    Var,
    WeightedClause,
)

TENTHS = tuple(Fraction(i, 10) for i in range(1, 11))


@dataclass
class GroundBaseConfig:
    max_atoms: int = 6
    max_clauses: int = 10
    max_len: int = 3
    weights: Tuple[Fraction, ...] = TENTHS


def random_literal(rng: random.Random, atoms: List[str]) -> Literal:
    return Literal(rng.choice(atoms), (), rng.random() < 0.5)


def random_clause(rng: random.Random, atoms: List[str], max_len: int) -> Clause:
    return Clause(tuple(random_literal(rng, atoms) for _ in range(rng.randint(1, max_len))))


def random_ground_base(rng: random.Random, cfg: Optional[GroundBaseConfig] = None) -> KnowledgeBase:
    """Propositional N-valued base with weights drawn from ``cfg.weights``."""
    cfg = cfg or GroundBaseConfig()
    atoms = [f"p{i}" for i in range(rng.randint(1, cfg.max_atoms))]
    clauses = []
    for i in range(rng.randint(1, cfg.max_clauses)):
        w = rng.choice(cfg.weights)
        clauses.append(WeightedClause(random_clause(rng, atoms, cfg.max_len), Valuation(Kind.N, Deg(w)), f"K{i}"))
    return KnowledgeBase(tuple(clauses))


def random_goal(rng: random.Random, kb: KnowledgeBase, max_len: int = 2) -> Goal:
    """A ground clause goal over the base's atoms."""
    atoms = sorted({lit.predicate for c in kb.clauses for lit in c.clause}) or ["p0"]
    lits = {}
    for _ in range(rng.randint(1, max_len)):
        lit = random_literal(rng, atoms)
        lits[lit.predicate] = lit  # keep goals non-tautological
    return Goal(tuple(lits.values()), disjunctive=True)


# ------------------------------------------------------- sup-min instances

@dataclass
class SupInstance:
    kb: KnowledgeBase
    weight: object  # body with free variable T (and possibly Y)
    domain: Domain
    ys: Tuple[Const, ...]


def random_sup_instance(rng: random.Random, n_elems: int = 4, n_ys: int = 2) -> SupInstance:
    """Tabled memberships over a finite domain and a random min/max body.

    The body mixes unary ``mu(fi, T)``, binary ``mu(gi, Y, T)`` and
    constants, so eliminating ``T`` leaves a weight that depends on ``Y``.
    """
    elems = tuple(Const(f"e{i}") for i in range(rng.randint(1, n_elems)))
    ys = tuple(Const(f"y{i}") for i in range(rng.randint(1, n_ys)))
    fuzzy = {}
    for i in range(2):
        name = f"f{i}"
        fuzzy[name] = FuzzyDef(name, table=tuple(((e,), rng.choice(TENTHS + (Fraction(0),))) for e in elems))
        name = f"g{i}"
        fuzzy[name] = FuzzyDef(
            name, table=tuple(((y, e), rng.choice(TENTHS + (Fraction(0),))) for y in ys for e in elems)
        )
    dom = Domain("t", elems)

    def leaf():
        r = rng.random()
        if r < 0.4:
            return Memb(f"f{rng.randint(0, 1)}", (Var("T"),))
        if r < 0.8:
            return Memb(f"g{rng.randint(0, 1)}", (Var("Y"), Var("T")))
        return Deg(rng.choice(TENTHS))

    def tree(depth):
        if depth == 0 or rng.random() < 0.3:
            return leaf()
        if rng.random() < 0.7:
            return Min(tree(depth - 1), tree(depth - 1))
        return Max(tuple(tree(depth - 1) for _ in range(rng.randint(1, 3))))

    body = tree(3)
    if "T" not in body.free_vars():
        body = Min(body, Memb("f0", (Var("T"),)))
    kb = KnowledgeBase((), fuzzy, {"t": dom})
    return SupInstance(kb, body, dom, ys)


__all__ = [
    "GroundBaseConfig",
    "SupInstance",
    "TENTHS",
    "random_clause",
    "random_goal",
    "random_ground_base",
    "random_literal",
    "random_sup_instance",
]
