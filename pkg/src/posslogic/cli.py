"""Command-line front end.

Exit codes: 0 ok, 1 goal not established (or not valid with --validate),
2 input error, 3 search limit reached.
"""

from __future__ import annotations

import argparse
import logging
import sys
from importlib import resources
from pathlib import Path
from typing import List, Optional

from .engine import SearchConfig, Status, refute
from .hypotheses import HypothesisSet, hypothesize
from .model import KBError, format_number
from .parser import ParseError, parse_goal, parse_kb, parse_literal, serialize_trace
from .revision import inconsistency_degree, preferred_extensions, query
from .semantics import semantic_inconsistency

EXIT_OK, EXIT_NOT_ESTABLISHED, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

ENGINES = {"cut": "alpha_cut", "bestfirst": "best_first"}


class InputError(Exception):
    pass


def read_kb_text(name: str) -> str:
    """Read a KB file; bare names of bundled examples also resolve."""
    path = Path(name)
    if path.exists():
        return path.read_text(encoding="utf-8")
    bundled = resources.files("posslogic") / "data" / path.name
    if bundled.is_file():
        return bundled.read_text(encoding="utf-8")
    raise InputError(f"{name}: no such file")


def load_kb(name: str):
    text = read_kb_text(name)
    try:
        return parse_kb(text)
    except ParseError as exc:
        raise InputError(f"{name}:{exc.span}: {exc.message}") from None


def _goal(text: str):
    try:
        return parse_goal(text)
    except ParseError as exc:
        raise InputError(f"goal:{exc.span}: {exc.message}") from None


def _config(args) -> SearchConfig:
    if args.max_steps <= 0 or args.max_depth <= 0:
        raise InputError("limits must be positive")
    return SearchConfig(
        engine=ENGINES[args.engine],
        max_steps=args.max_steps,
        max_depth=args.max_depth,
        collect_all_refutations=getattr(args, "all_refutations", False),
    )


def _result_line(r) -> str:
    if r.best is None:
        return f"RESULT none {r.status.value}"
    return f"RESULT val={r.best} {r.status.value}"


# ------------------------------------------------------------- commands

def cmd_prove(args, out) -> int:
    kb = load_kb(args.kb)
    goal = _goal(args.goal)
    cfg = _config(args)
    r = refute(kb, goal, cfg)
    if args.all_refutations:
        for i, t in enumerate(r.all, 1):
            out.write(f"refutation {i} val={t.valuation}\n")
    if args.trace and r.trace is not None:
        out.write(serialize_trace(r.trace))  # ends with the RESULT line
    else:
        out.write(_result_line(r) + "\n")
    code = EXIT_OK if r.best is not None else EXIT_NOT_ESTABLISHED
    if args.validate:
        verdict = query(kb, goal, SearchConfig(cfg.engine, cfg.max_steps, cfg.max_depth))
        out.write(f"{verdict}\n")
        if not verdict.valid:
            code = EXIT_NOT_ESTABLISHED
    if r.status is Status.INCOMPLETE:
        code = EXIT_LIMIT
    return code


def cmd_consistency(args, out) -> int:
    kb = load_kb(args.kb)
    if args.semantic:
        inc = semantic_inconsistency(kb)
    else:
        inc = inconsistency_degree(kb, _config(args))
    out.write(f"Inc={format_number(inc)} c={format_number(1 - inc)}\n")
    return EXIT_OK


def cmd_extensions(args, out) -> int:
    kb = load_kb(args.kb)
    for e in preferred_extensions(kb):
        out.write(f"{e}  rank={e.rank} kept={','.join(e.kept) or '-'} dropped={','.join(e.dropped) or '-'}\n")
    return EXIT_OK


def _parse_assumption(text: str):
    atom, sep, value = text.rpartition("=")
    if not sep or value not in ("true", "false", "open"):
        raise InputError(f"--assume expects atom=true|false|open, got {text!r}")
    try:
        lit = parse_literal(atom)
    except ParseError as exc:
        raise InputError(f"--assume {text}: {exc.message}") from None
    return lit, {"true": True, "false": False, "open": None}[value]


def _hyp_pattern(text: str):
    try:
        return parse_literal(text)
    except ParseError as exc:
        raise InputError(f"--hyp {text}: {exc.message}") from None


def cmd_hypothesize(args, out) -> int:
    if not args.hyp:
        args.trace = False
        args.validate = False
        args.all_refutations = False
        return cmd_prove(args, out)
    kb = load_kb(args.kb)
    goal = _goal(args.goal)
    try:
        hyps = HypothesisSet(
            tuple(_hyp_pattern(h) for h in args.hyp),
            dict(_parse_assumption(a) for a in args.assume),
        )
    except KBError as exc:
        raise InputError(str(exc)) from None
    answer = hypothesize(kb, hyps, goal, _config(args))
    for v in answer.alternatives:
        out.write(f"alternative val={v}\n")
    best = answer.evaluate(hyps.assignment)
    env = " ".join(
        f"{a}={'open' if hyps.assignment.get(a) is None else str(hyps.assignment[a]).lower()}"
        for a in answer.atoms
    )
    status = answer.refutation.status if answer.refutation else Status.UNVERIFIED
    shown = f"val={best}" if best is not None else "none"
    out.write(f"RESULT {shown} {status.value}" + (f" under {env}" if env else "") + "\n")
    if status is Status.INCOMPLETE:
        return EXIT_LIMIT
    return EXIT_OK if best is not None else EXIT_NOT_ESTABLISHED


# --------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="posslogic", description="Possibilistic resolution reasoner.")
    p.add_argument("-v", "--verbose", action="store_true", help="log search decisions to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def search_flags(sp):
        sp.add_argument("--engine", choices=sorted(ENGINES), default="cut")
        sp.add_argument("--max-steps", type=int, default=100_000)
        sp.add_argument("--max-depth", type=int, default=64)

    sp = sub.add_parser("prove", help="refute the negated goal and report its certainty")
    sp.add_argument("kb")
    sp.add_argument("goal")
    search_flags(sp)
    sp.add_argument("--trace", action="store_true", help="print the best proof trace")
    sp.add_argument("--all-refutations", action="store_true", help="list every distinct refutation found")
    sp.add_argument("--validate", action="store_true", help="compare the certainty with the inconsistency degree")
    sp.set_defaults(func=cmd_prove)

    sp = sub.add_parser("consistency", help="inconsistency degree of the necessity clauses")
    sp.add_argument("kb")
    search_flags(sp)
    sp.add_argument("--semantic", action="store_true", help="enumerate interpretations instead of refuting")
    sp.set_defaults(func=cmd_consistency)

    sp = sub.add_parser("extensions", help="maximal consistent sub-bases, most preferred first")
    sp.add_argument("kb")
    sp.set_defaults(func=cmd_extensions)

    sp = sub.add_parser("hypothesize", help="answer a goal as a function of hypothesis atoms")
    sp.add_argument("kb")
    sp.add_argument("goal")
    search_flags(sp)
    sp.add_argument("--hyp", action="append", default=[], help="predicate name or atom pattern, e.g. comes(Bob,X)")
    sp.add_argument("--assume", action="append", default=[], help="atom=true|false|open")
    sp.set_defaults(func=cmd_hypothesize)
    return p


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err, format="%(message)s")
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except KBError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
