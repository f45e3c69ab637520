"""Text formats: knowledge bases, goals and proof traces.

Knowledge-base grammar (whitespace-insensitive, ``#`` starts a comment)::

    file        := { stmt }
    stmt        := clause_stmt | fuzzy_stmt | domain_stmt
    clause_stmt := "clause" ( lits | "false" ) ":" weight [ "as" ident ]
    lits        := literal { "|" literal }
    literal     := [ "~" ] atom
    atom        := ident [ "(" term { "," term } ")" ]
    term        := VAR | ident | number | ident "(" term { "," term } ")"
    weight      := ( "N" | "P" ) wexpr
    wexpr       := number
                 | "mu" "(" ident "," term { "," term } ")"
                 | "min" "(" wexpr "," wexpr { "," wexpr } ")"
                 | "max" "(" wexpr { "," wexpr } ")"
                 | "sup" "(" VAR ":" ident "," wexpr ")"
                 | "charneg" "(" literal ")"
                 | "gate" "(" wexpr "," wexpr ")"
    fuzzy_stmt  := "fuzzy" ident ( "linear" point point { point } | "table" entry { entry } )
    point       := "(" number "," number ")"
    entry       := ( const | "(" const { "," const } ")" ) "=" number
    domain_stmt := "domain" ident ( "{" const { "," const } "}" | "range" number number )

Variables are all-caps identifiers (``X``, ``T``, ``X_3``); every other
identifier (``Bob``, ``m``, ``lives-in-Antarctica``) is a constant or a
symbol name.  Numbers are exact decimals or ``p/q`` fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .engine import ProofStep, ProofTrace, Rule, Status
from .model import (
    CharNeg,
    Clause,
    Const,
    Deg,
    Domain,
    Fn,
    FuzzyDef,
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
    format_number,
)

__all__ = [
    "Goal",
    "ParseError",
    "SourceSpan",
    "parse_kb",
    "parse_goal",
    "parse_literal",
    "parse_trace",
    "serialize_kb",
    "serialize_trace",
]


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    length: int

    def __str__(self):
        return f"{self.line}:{self.column}"


class ParseError(Exception):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{span}: {message}")
        self.message = message
        self.span = span


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<number>-?\d+(?:\.\d+)?(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z0-9_]+)*)
  | (?P<punct>[()\[\],|~:{}&=])
  | (?P<neg>¬)
    """,
    re.VERBOSE,
)

_VAR = re.compile(r"[A-Z][A-Z0-9_]*\Z")
_STATEMENTS = ("clause", "fuzzy", "domain")


@dataclass(frozen=True)
class _Tok:
    kind: str  # number | name | var | punct | eof
    text: str
    span: SourceSpan


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", SourceSpan(line, col, 1))
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "ws":
            for i, ch in enumerate(lexeme):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            if kind == "neg":
                kind, lexeme = "punct", "~"
            elif kind == "name" and _VAR.match(lexeme):
                kind = "var"
            toks.append(_Tok(kind, lexeme, SourceSpan(line, col, len(m.group()))))
        pos = m.end()
    if toks:
        last = toks[-1].span
        end = SourceSpan(last.line, last.column + last.length, 0)
    else:
        end = SourceSpan(1, 1, 0)
    toks.append(_Tok("eof", "", end))
    return toks


def _number(text: str) -> Fraction:
    return Fraction(text)


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    # -- token helpers

    @property
    def tok(self) -> _Tok:
        return self.toks[self.pos]

    def error(self, message: str, tok: Optional[_Tok] = None) -> ParseError:
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"{message}, found {found}", tok.span)

    def advance(self) -> _Tok:
        tok = self.tok
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind in ("punct", "name", "var") and self.tok.text == text

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            raise self.error(f"expected {text!r}")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> _Tok:
        if self.tok.kind != kind:
            raise self.error(f"expected {what}")
        return self.advance()

    # -- terms and literals

    def term(self):
        tok = self.tok
        if tok.kind == "var":
            self.advance()
            return Var(tok.text)
        if tok.kind == "number":
            self.advance()
            return Const(_number(tok.text))
        if tok.kind == "name":
            self.advance()
            if self.at("("):
                return Fn(tok.text, self.term_list())
            return Const(tok.text)
        raise self.error("expected a term")

    def term_list(self) -> tuple:
        self.expect("(")
        args = [self.term()]
        while self.at(","):
            self.advance()
            args.append(self.term())
        self.expect(")")
        return tuple(args)

    def atom(self, positive: bool = True) -> Literal:
        tok = self.tok
        if tok.kind not in ("name", "var") or tok.text == "false":
            raise self.error("expected a predicate")
        self.advance()
        args = self.term_list() if self.at("(") else ()
        return Literal(tok.text, args, positive)

    def literal(self) -> Literal:
        positive = True
        while self.at("~"):
            self.advance()
            positive = not positive
        return self.atom(positive)

    # -- weights

    def degree_number(self) -> Fraction:
        tok = self.expect_kind("number", "a number")
        value = _number(tok.text)
        if not 0 <= value <= 1:
            raise ParseError(f"degree {tok.text} outside [0, 1]", tok.span)
        return value

    def wexpr(self):
        tok = self.tok
        if tok.kind == "number":
            return Deg(self.degree_number())
        if tok.kind != "name":
            raise self.error("expected a weight")
        head = tok.text
        if head == "mu":
            self.advance()
            self.expect("(")
            fn = self.expect_kind("name", "a fuzzy function name").text
            args = []
            while self.at(","):
                self.advance()
                args.append(self.term())
            if not args:
                raise self.error("mu needs an argument")
            self.expect(")")
            return Memb(fn, tuple(args))
        if head in ("min", "max", "gate"):
            self.advance()
            self.expect("(")
            items = [self.wexpr()]
            while self.at(","):
                self.advance()
                items.append(self.wexpr())
            close = self.expect(")")
            if head == "max":
                return Max(tuple(items))
            if head == "gate":
                if len(items) != 2:
                    raise ParseError("gate takes two weights", close.span)
                return Gate(*items)
            if len(items) < 2:
                raise ParseError("min takes at least two weights", close.span)
            out = items[0]
            for item in items[1:]:
                out = Min(out, item)
            return out
        if head == "sup":
            self.advance()
            self.expect("(")
            var = self.expect_kind("var", "a variable").text
            self.expect(":")
            dom = self.expect_kind("name", "a domain name").text
            self.expect(",")
            body = self.wexpr()
            self.expect(")")
            return Sup(var, dom, body)
        if head == "charneg":
            self.advance()
            self.expect("(")
            lit = self.literal()
            self.expect(")")
            return CharNeg(lit)
        raise self.error("expected a weight")

    def valuation(self) -> Valuation:
        tok = self.tok
        if tok.text not in ("N", "P"):
            raise self.error("expected N or P")
        self.advance()
        return Valuation(Kind(tok.text), self.wexpr())

    # -- statements

    def constant(self) -> Const:
        tok = self.tok
        if tok.kind == "number":
            self.advance()
            return Const(_number(tok.text))
        if tok.kind == "name":
            self.advance()
            return Const(tok.text)
        raise self.error("expected a constant")

    def clause_stmt(self) -> WeightedClause:
        self.expect("clause")
        if self.at("false"):
            self.advance()
            lits: list = []
        else:
            lits = [self.literal()]
            while self.at("|"):
                self.advance()
                lits.append(self.literal())
        self.expect(":")
        val = self.valuation()
        label = None
        if self.at("as"):
            self.advance()
            tok = self.tok
            if tok.kind not in ("name", "var"):
                raise self.error("expected a label")
            label = self.advance().text
        return WeightedClause(Clause(tuple(lits)), val, label)

    def fuzzy_stmt(self) -> FuzzyDef:
        self.expect("fuzzy")
        name_tok = self.expect_kind("name", "a fuzzy function name")
        if self.at("linear"):
            self.advance()
            points = [self.point(), self.point()]
            while self.at("("):
                points.append(self.point())
            make = lambda: FuzzyDef(name_tok.text, points=tuple(points))  # noqa: E731
        elif self.at("table"):
            self.advance()
            entries = [self.entry()]
            while (self.tok.kind in ("name", "number") and self.tok.text not in _STATEMENTS) or self.at("("):
                entries.append(self.entry())
            make = lambda: FuzzyDef(name_tok.text, table=tuple(entries))  # noqa: E731
        else:
            raise self.error("expected 'linear' or 'table'")
        try:
            return make()
        except KBError as exc:
            raise ParseError(str(exc), name_tok.span) from None

    def point(self) -> tuple:
        self.expect("(")
        x = _number(self.expect_kind("number", "a number").text)
        self.expect(",")
        y = _number(self.expect_kind("number", "a number").text)
        self.expect(")")
        return (x, y)

    def entry(self) -> tuple:
        if self.at("("):
            self.advance()
            key = [self.constant()]
            while self.at(","):
                self.advance()
                key.append(self.constant())
            self.expect(")")
        else:
            key = [self.constant()]
        self.expect("=")
        return (tuple(key), self.degree_number())

    def domain_stmt(self) -> Domain:
        self.expect("domain")
        name = self.expect_kind("name", "a domain name").text
        if self.at("{"):
            self.advance()
            elems = [self.constant()]
            while self.at(","):
                self.advance()
                elems.append(self.constant())
            self.expect("}")
            return Domain(name, tuple(elems))
        if self.at("range"):
            self.advance()
            lo_tok = self.expect_kind("number", "a number")
            hi = _number(self.expect_kind("number", "a number").text)
            lo = _number(lo_tok.text)
            if lo > hi:
                raise ParseError("empty range", lo_tok.span)
            return Domain(name, interval=(lo, hi))
        raise self.error("expected '{' or 'range'")

    def kb(self) -> KnowledgeBase:
        clauses, spans = [], []
        fuzzy: dict = {}
        domains: dict = {}
        while self.tok.kind != "eof":
            start = self.tok
            if self.at("clause"):
                clauses.append(self.clause_stmt())
                spans.append(start.span)
            elif self.at("fuzzy"):
                fd = self.fuzzy_stmt()
                if fd.name in fuzzy:
                    raise ParseError(f"fuzzy function {fd.name} declared twice", start.span)
                fuzzy[fd.name] = fd
            elif self.at("domain"):
                dom = self.domain_stmt()
                if dom.name in domains:
                    raise ParseError(f"domain {dom.name} declared twice", start.span)
                domains[dom.name] = dom
            else:
                raise self.error("expected 'clause', 'fuzzy' or 'domain'")
        try:
            return KnowledgeBase(tuple(clauses), fuzzy, domains)
        except KBError as exc:
            # locate the first clause that makes the base invalid
            for i in range(len(clauses)):
                try:
                    KnowledgeBase(tuple(clauses[: i + 1]), fuzzy, domains)
                except KBError as inner:
                    raise ParseError(str(inner), spans[i]) from None
            raise ParseError(str(exc), SourceSpan(1, 1, 0)) from None

    def done(self):
        if self.tok.kind != "eof":
            raise self.error("unexpected trailing input")


def parse_kb(text: str) -> KnowledgeBase:
    """Parse a knowledge base; raises ``ParseError`` carrying a ``SourceSpan``."""
    return _Parser(text).kb()


def parse_goal(text: str) -> Goal:
    """Parse ``l1 & l2 & ...`` (a conjunction) or ``l1 | l2 | ...`` (a ground clause)."""
    p = _Parser(text)
    lits = [p.literal()]
    sep = None
    while p.at("&") or p.at("|"):
        if sep is not None and p.tok.text != sep:
            raise p.error("cannot mix '&' and '|' in one goal")
        sep = p.advance().text
        lits.append(p.literal())
    p.done()
    try:
        return Goal(tuple(lits), disjunctive=(sep == "|"))
    except KBError as exc:
        raise ParseError(str(exc), SourceSpan(1, 1, len(text))) from None


def parse_literal(text: str) -> Literal:
    p = _Parser(text)
    lit = p.literal()
    p.done()
    return lit


def parse_weight(text: str):
    p = _Parser(text)
    w = p.wexpr()
    p.done()
    return w


# ----------------------------------------------------------- serializing

def serialize_clause(c: WeightedClause) -> str:
    tail = f" as {c.label}" if c.label else ""
    return f"clause {c.clause} : {c.valuation}{tail}"


def serialize_kb(kb: KnowledgeBase) -> str:
    lines = []
    for fd in kb.fuzzy.values():
        if fd.is_linear:
            pts = " ".join(f"({format_number(x)}, {format_number(y)})" for x, y in fd.points)
            lines.append(f"fuzzy {fd.name} linear {pts}")
        else:
            entries = []
            for key, y in fd.table:
                k = str(key[0]) if len(key) == 1 else f"({', '.join(map(str, key))})"
                entries.append(f"{k}={format_number(y)}")
            lines.append(f"fuzzy {fd.name} table {' '.join(entries)}")
    for dom in kb.domains.values():
        if dom.is_finite:
            lines.append(f"domain {dom.name} {{{', '.join(map(str, dom.elements))}}}")
        else:
            lo, hi = dom.interval
            lines.append(f"domain {dom.name} range {format_number(lo)} {format_number(hi)}")
    lines.extend(serialize_clause(c) for c in kb.clauses)
    return "\n".join(lines) + "\n"


def _trace_clause(clause: Clause) -> str:
    return "|".join(lit.text for lit in clause) if clause.literals else "[]"


def serialize_trace(trace: ProofTrace) -> str:
    """One ``step`` record per line, then the ``RESULT`` line."""
    lines = []
    for step in trace.steps:
        parts = [f"step {step.id} {step.rule.value}"]
        if step.result.label:
            parts.append(f"label={step.result.label}")
        if step.parents:
            parts.append("parents=" + ",".join(map(str, step.parents)))
        if step.unifier:
            parts.append("theta=" + ",".join(f"{k}={v}" for k, v in sorted(step.unifier.items())))
        parts.append(f"clause={_trace_clause(step.result.clause)}")
        parts.append(f"val={step.result.valuation}")
        lines.append(" ".join(parts))
    lines.append(f"RESULT val={trace.valuation} {trace.status.value}")
    return "\n".join(lines) + "\n"


_STEP = re.compile(
    r"step (?P<id>\d+) (?P<rule>\S+)"
    r"(?: label=(?P<label>\S+))?"
    r"(?: parents=(?P<parents>[\d,]+))?"
    r"(?: theta=(?P<theta>\S+))?"
    r" clause=(?P<clause>\S+) val=(?P<kind>[NP]) (?P<weight>\S+)\Z"
)
_RESULT = re.compile(r"RESULT val=[NP] \S+ (?P<status>\w+)\Z")


def _parse_theta(text: str) -> dict:
    p = _Parser(text)
    out = {}
    while True:
        var = p.expect_kind("var", "a variable").text
        p.expect("=")
        out[var] = p.term()
        if not p.at(","):
            break
        p.advance()
    p.done()
    return out


def parse_trace(text: str) -> ProofTrace:
    """Inverse of ``serialize_trace``."""
    rules = {r.value: r for r in Rule}
    steps = []
    status = Status.UNVERIFIED
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        m = _STEP.match(line)
        if m:
            if m["clause"] == "[]":
                clause = Clause()
            else:
                clause = Clause(tuple(parse_literal(x) for x in m["clause"].split("|")))
            val = Valuation(Kind(m["kind"]), parse_weight(m["weight"]))
            steps.append(
                ProofStep(
                    int(m["id"]),
                    rules[m["rule"]],
                    WeightedClause(clause, val, m["label"]),
                    tuple(int(x) for x in m["parents"].split(",")) if m["parents"] else (),
                    _parse_theta(m["theta"]) if m["theta"] else {},
                )
            )
            continue
        m = _RESULT.match(line)
        if m:
            status = Status(m["status"])
            continue
        raise ParseError("not a trace record", SourceSpan(lineno, 1, len(line)))
    return ProofTrace(tuple(steps), status)
