"""Robinson unification, one-way matching and clause renaming."""

from __future__ import annotations

from typing import Dict, Optional

from .model import Fn, Literal, Term, Valuation, Var, WeightedClause, var_base

Substitution = Dict[str, Term]


def _walk(t: Term, theta: Substitution) -> Term:
    while isinstance(t, Var) and t.name in theta:
        t = theta[t.name]
    return t


def _occurs(name: str, t: Term, theta: Substitution) -> bool:
    t = _walk(t, theta)
    if isinstance(t, Var):
        return t.name == name
    if isinstance(t, Fn):
        return any(_occurs(name, a, theta) for a in t.args)
    return False


def _unify(a: Term, b: Term, theta: Substitution) -> bool:
    a, b = _walk(a, theta), _walk(b, theta)
    if a == b:
        return True
    # bind the second side's variable first so the first clause keeps its names
    if isinstance(b, Var):
        if _occurs(b.name, a, theta):
            return False
        theta[b.name] = a
        return True
    if isinstance(a, Var):
        if _occurs(a.name, b, theta):
            return False
        theta[a.name] = b
        return True
    if isinstance(a, Fn) and isinstance(b, Fn):
        if a.functor != b.functor or len(a.args) != len(b.args):
            return False
        return all(_unify(x, y, theta) for x, y in zip(a.args, b.args))
    return False


def _resolve(t: Term, theta: Substitution) -> Term:
    t = _walk(t, theta)
    if isinstance(t, Fn):
        return Fn(t.functor, tuple(_resolve(a, theta) for a in t.args))
    return t


def unify_args(args1: tuple, args2: tuple, theta: Optional[Substitution] = None) -> Optional[Substitution]:
    """Most general unifier of two argument tuples, extending ``theta``."""
    if len(args1) != len(args2):
        return None
    work = dict(theta or {})
    for x, y in zip(args1, args2):
        if not _unify(x, y, work):
            return None
    return {k: _resolve(v, work) for k, v in work.items()}


def mgu(l1: Literal, l2: Literal) -> Optional[Substitution]:
    """Most general unifier of the atoms of two literals, or None.

    Signs are ignored; the caller decides whether the literals should be
    complementary (resolution) or alike (factoring).
    """
    if l1.predicate != l2.predicate:
        return None
    return unify_args(l1.args, l2.args)


def match_term(pattern: Term, target: Term, theta: Substitution) -> bool:
    """One-way matching: bind variables of ``pattern`` only."""
    if isinstance(pattern, Var):
        bound = theta.get(pattern.name)
        if bound is None:
            theta[pattern.name] = target
            return True
        return bound == target
    if isinstance(pattern, Fn):
        if not isinstance(target, Fn) or pattern.functor != target.functor or len(pattern.args) != len(target.args):
            return False
        return all(match_term(p, t, theta) for p, t in zip(pattern.args, target.args))
    return pattern == target


def match_literal(pattern: Literal, target: Literal, theta: Substitution) -> Optional[Substitution]:
    if pattern.predicate != target.predicate or pattern.positive != target.positive:
        return None
    if len(pattern.args) != len(target.args):
        return None
    work = dict(theta)
    for p, t in zip(pattern.args, target.args):
        if not match_term(p, t, work):
            return None
    return work


def compose(s: Substitution, t: Substitution) -> Substitution:
    """``compose(s, t)`` applies ``s`` first, then ``t``."""
    out = {k: v.substitute(t) for k, v in s.items()}
    for k, v in t.items():
        out.setdefault(k, v)
    return {k: v for k, v in out.items() if v != Var(k)}


def apply_subst(c: WeightedClause, theta: Substitution) -> WeightedClause:
    """Instantiate a weighted clause, weight included; the kind is unchanged."""
    if not theta:
        return c
    return WeightedClause(
        c.clause.substitute(theta),
        Valuation(c.kind, c.weight.substitute(theta)),
        c.label,
    )


def renaming(names, seed: int) -> Substitution:
    """Fresh names ``<base>_<seed>`` for ``names``; clashing bases get an index."""
    names = sorted(names)
    bases: dict = {}
    for n in names:
        bases.setdefault(var_base(n), []).append(n)
    out: Substitution = {}
    for base, group in bases.items():
        if len(group) == 1:
            out[group[0]] = Var(f"{base}_{seed}")
        else:
            for i, n in enumerate(group):
                out[n] = Var(f"{base}_{seed}_{i}")
    return out


def rename_apart(c: WeightedClause, seed: int) -> WeightedClause:
    """Alpha-variant of ``c`` whose variables all carry the suffix ``_<seed>``."""
    names = c.variables()
    if not names:
        return c
    return apply_subst(c, renaming(names, seed))
