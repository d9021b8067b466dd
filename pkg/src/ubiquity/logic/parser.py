"""Recursive-descent parser for the ASCII concrete syntax of L(U).

Grammar, loosest binding first::

    formula := imp ("<->" imp)*            left associative
    imp     := disj ("->" imp)?            right associative
    disj    := conj ("|" conj)*
    conj    := unary ("&" unary)*
    unary   := "~" unary
             | ("forall" | "exists" | "U") VAR unary
             | PRED ["(" VAR ("," VAR)* ")"]
             | VAR "=" VAR
             | "(" formula ")"

Predicate symbols start with an uppercase letter, variables with a
lowercase letter; ``U``, ``forall`` and ``exists`` are reserved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError
from .syntax import And, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Pred, Ubiq, signature

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+|\n)
  | (?P<op><->|->|[~&|(),=])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)

KEYWORDS = {"forall", "exists", "U"}


@dataclass(frozen=True)
class Token:
    kind: str  # "op", "kw", "pred", "var", "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        s = m.group()
        if m.lastgroup == "ws":
            if s == "\n":
                line, col = line + 1, 1
            else:
                col += len(s)
        else:
            if m.lastgroup == "op":
                kind = "op"
            elif s in KEYWORDS:
                kind = "kw"
            elif s[0].isupper():
                kind = "pred"
            else:
                kind = "var"
            tokens.append(Token(kind, s, line, col))
            col += len(s)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


_DESCRIBE = {"pred": "predicate", "var": "variable", "eof": "end of input"}
_START = frozenset({"'~'", "'('", "'forall'", "'exists'", "'U'", "predicate", "variable"})


def _show(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "kw") and self.tok.text == text

    def fail(self, expected):
        tok = self.tok
        raise ParseError(f"unexpected {_show(tok)}", tok.line, tok.column, expected)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail({f"'{text}'"})
        return self.advance()

    def expect_var(self) -> str:
        if self.tok.kind != "var":
            self.fail({"variable"})
        return self.advance().text

    def parse(self) -> Formula:
        phi = self.formula()
        if self.tok.kind != "eof":
            self.fail({"end of input", "'<->'", "'->'", "'|'", "'&'"})
        return phi

    def formula(self) -> Formula:
        left = self.imp()
        while self.at("<->"):
            self.advance()
            left = Iff(left, self.imp())
        return left

    def imp(self) -> Formula:
        left = self.disj()
        if self.at("->"):
            self.advance()
            return Implies(left, self.imp())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        while self.at("|"):
            self.advance()
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.at("&"):
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.tok
        if self.at("~"):
            self.advance()
            return Not(self.unary())
        if tok.kind == "kw":
            self.advance()
            var = self.expect_var()
            body = self.unary()
            return {"forall": Forall, "exists": Exists, "U": Ubiq}[tok.text](var, body)
        if self.at("("):
            self.advance()
            phi = self.formula()
            if not self.at(")"):
                self.fail({"')'", "'<->'", "'->'", "'|'", "'&'"})
            self.advance()
            return phi
        if tok.kind == "pred":
            self.advance()
            if not self.at("("):
                return Pred(tok.text, ())
            self.advance()
            args = [self.expect_var()]
            while self.at(","):
                self.advance()
                args.append(self.expect_var())
            if not self.at(")"):
                self.fail({"')'", "','"})
            self.advance()
            return Pred(tok.text, tuple(args))
        if tok.kind == "var":
            left = self.advance().text
            self.expect("=")
            return Eq(left, self.expect_var())
        self.fail(_START)


def parse(text: str) -> Formula:
    """Parse formula text; raises ParseError (positioned) or ArityError."""
    phi = _Parser(text).parse()
    signature(phi)
    return phi
