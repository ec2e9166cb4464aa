"""Formulas over unary predicate symbols: AST, parser and printer.

Concrete syntax::

    formula  := quant | impl
    quant    := ("forall" | "exists") var "." formula
    impl     := disj ("->" formula)?
    disj     := conj ("|" conj)*
    conj     := unary ("&" unary)*
    unary    := "~" unary | quant | atom
    atom     := "false" | pred "(" var ")" | "(" formula ")"

``~`` binds tightest, then ``&``, ``|`` and ``->`` (right associative).  A
quantifier may open any operand position; its body extends as far to the
right as possible.  There is no negation node: ``~p`` is read as
``p -> false``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "Formula",
    "Atom",
    "Bottom",
    "BOTTOM",
    "And",
    "Or",
    "Implies",
    "Exists",
    "Forall",
    "neg",
    "is_negation",
    "ParseError",
    "parse",
    "format_formula",
    "free_variables",
    "predicate_symbols",
    "is_sentence",
    "depth",
    "subformulas",
    "KEYWORDS",
]

KEYWORDS = frozenset({"forall", "exists", "false"})
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Formula:
    """Base class of all formula nodes.

    ``a & b``, ``a | b`` and ``~a`` build conjunctions, disjunctions and
    negations; ``a.implies(b)`` builds an implication.
    """

    __slots__ = ()

    def __and__(self, other: Formula) -> And:
        return And(self, other)

    def __or__(self, other: Formula) -> Or:
        return Or(self, other)

    def __invert__(self) -> Implies:
        return neg(self)

    def implies(self, other: Formula) -> Implies:
        return Implies(self, other)

    def __str__(self) -> str:
        return format_formula(self)


def _check_ident(name: str, what: str) -> None:
    if not isinstance(name, str) or not _IDENT.match(name) or name in KEYWORDS:
        raise ValueError(f"invalid {what} name: {name!r}")


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    pred: str
    var: str

    def __post_init__(self):
        _check_ident(self.pred, "predicate")
        _check_ident(self.var, "variable")

    def __repr__(self):
        return f"Atom({self.pred!r}, {self.var!r})"


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    def __repr__(self):
        return "Bottom()"


BOTTOM = Bottom()


@dataclass(frozen=True)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Or(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        _check_ident(self.var, "variable")


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        _check_ident(self.var, "variable")


def neg(phi: Formula) -> Implies:
    return Implies(phi, BOTTOM)


def is_negation(phi: Formula) -> bool:
    return isinstance(phi, Implies) and isinstance(phi.rhs, Bottom)


# -- structural queries -------------------------------------------------------

def free_variables(phi: Formula) -> frozenset[str]:
    match phi:
        case Atom(_, var):
            return frozenset((var,))
        case Bottom():
            return frozenset()
        case And(lhs, rhs) | Or(lhs, rhs) | Implies(lhs, rhs):
            return free_variables(lhs) | free_variables(rhs)
        case Exists(var, body) | Forall(var, body):
            return free_variables(body) - {var}
    raise TypeError(f"not a formula: {phi!r}")


def predicate_symbols(phi: Formula) -> frozenset[str]:
    return frozenset(a.pred for a in subformulas(phi) if isinstance(a, Atom))


def is_sentence(phi: Formula) -> bool:
    return not free_variables(phi)


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Pre-order traversal, including ``phi`` itself."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        match node:
            case And(lhs, rhs) | Or(lhs, rhs) | Implies(lhs, rhs):
                stack.append(rhs)
                stack.append(lhs)
            case Exists(_, body) | Forall(_, body):
                stack.append(body)


def depth(phi: Formula) -> int:
    """Height of the syntax tree; atoms and ``false`` have depth 0."""
    match phi:
        case And(lhs, rhs) | Or(lhs, rhs) | Implies(lhs, rhs):
            return 1 + max(depth(lhs), depth(rhs))
        case Exists(_, body) | Forall(_, body):
            return 1 + depth(body)
    return 0


# -- printing -----------------------------------------------------------------

_PREC_IMPL, _PREC_DISJ, _PREC_CONJ, _PREC_UNARY = range(4)


def format_formula(phi: Formula) -> str:
    """Print ``phi`` with the fewest parentheses that still reparse to it."""
    return _fmt(phi, _PREC_IMPL, True)


def _fmt(phi: Formula, need: int, tail: bool) -> str:
    # `tail`: nothing follows this text before a closing paren or the end,
    # so a quantifier printed here may let its body run to the right.
    match phi:
        case Atom(pred, var):
            return f"{pred}({var})"
        case Bottom():
            return "false"
        case Implies(lhs, Bottom()):
            return "~" + _fmt(lhs, _PREC_UNARY, tail)
        case Exists(var, body) | Forall(var, body):
            kw = "exists" if isinstance(phi, Exists) else "forall"
            text = f"{kw} {var}. {_fmt(body, _PREC_IMPL, True)}"
            return text if tail else f"({text})"
    if isinstance(phi, Implies):
        prec = _PREC_IMPL
    elif isinstance(phi, Or):
        prec = _PREC_DISJ
    elif isinstance(phi, And):
        prec = _PREC_CONJ
    else:
        raise TypeError(f"not a formula: {phi!r}")
    if prec < need:
        return "(" + _fmt_binary(phi, prec, True) + ")"
    return _fmt_binary(phi, prec, tail)


def _fmt_binary(phi, prec: int, tail: bool) -> str:
    if prec == _PREC_IMPL:
        return f"{_fmt(phi.lhs, _PREC_DISJ, False)} -> {_fmt(phi.rhs, _PREC_IMPL, tail)}"
    if prec == _PREC_DISJ:
        return f"{_fmt(phi.lhs, _PREC_DISJ, False)} | {_fmt(phi.rhs, _PREC_CONJ, tail)}"
    return f"{_fmt(phi.lhs, _PREC_CONJ, False)} & {_fmt(phi.rhs, _PREC_UNARY, tail)}"


# -- parsing ------------------------------------------------------------------

class ParseError(ValueError):
    """Syntax error at a 1-based ``line``/``column`` position."""

    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = f"; expected one of: {', '.join(sorted(self.expected))}" if self.expected else ""
        super().__init__(f"line {line}, column {column}: {message}{detail}")


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<arrow>->)|(?P<punct>[~&|().])|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", one of the punctuation strings, a keyword, or "end"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        group = m.lastgroup
        value = m.group()
        if group == "ws":
            for i, ch in enumerate(value):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            if group == "ident":
                kind = value if value in KEYWORDS else "ident"
            else:
                kind = value
            tokens.append(_Token(kind, value, line, pos - line_start + 1))
        pos = m.end()
    tokens.append(_Token("end", "", line, pos - line_start + 1))
    return tokens


_STARTERS = frozenset({"~", "(", "false", "forall", "exists", "identifier"})


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def fail(self, expected) -> ParseError:
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"unexpected {found}", tok.line, tok.column, expected)

    def expect(self, kind: str) -> _Token:
        tok = self.tok
        if tok.kind != kind:
            raise self.fail({"identifier" if kind == "ident" else kind})
        self.pos += 1
        return tok

    def formula(self) -> Formula:
        if self.tok.kind in ("forall", "exists"):
            return self.quant()
        return self.impl()

    def quant(self) -> Formula:
        kw = self.tok.kind
        self.pos += 1
        var = self.expect("ident").text
        self.expect(".")
        body = self.formula()
        return Forall(var, body) if kw == "forall" else Exists(var, body)

    def impl(self) -> Formula:
        lhs = self.disj()
        if self.tok.kind == "->":
            self.pos += 1
            return Implies(lhs, self.formula())
        return lhs

    def disj(self) -> Formula:
        phi = self.conj()
        while self.tok.kind == "|":
            self.pos += 1
            phi = Or(phi, self.conj())
        return phi

    def conj(self) -> Formula:
        phi = self.unary()
        while self.tok.kind == "&":
            self.pos += 1
            phi = And(phi, self.unary())
        return phi

    def unary(self) -> Formula:
        kind = self.tok.kind
        if kind == "~":
            self.pos += 1
            return Implies(self.unary(), BOTTOM)
        if kind in ("forall", "exists"):
            return self.quant()
        return self.atom()

    def atom(self) -> Formula:
        tok = self.tok
        if tok.kind == "false":
            self.pos += 1
            return BOTTOM
        if tok.kind == "(":
            self.pos += 1
            phi = self.formula()
            if self.tok.kind != ")":
                raise self.fail({"&", "|", "->", ")"})
            self.pos += 1
            return phi
        if tok.kind == "ident":
            self.pos += 1
            self.expect("(")
            var = self.expect("ident").text
            self.expect(")")
            return Atom(tok.text, var)
        raise self.fail(_STARTERS)

    def parse(self) -> Formula:
        phi = self.formula()
        if self.tok.kind != "end":
            raise self.fail({"&", "|", "->", "end of input"})
        return phi


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula, raising :class:`ParseError` on bad input."""
    return _Parser(text).parse()
