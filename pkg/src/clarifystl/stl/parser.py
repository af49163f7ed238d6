"""Recursive-descent parser for the STL surface grammar.

Precedence, loosest first: `->` (right-assoc), `|`, `&`, infix `U[l,u]`,
then prefix `!` / `G[l,u]` / `F[l,u]`, then atoms and parentheses.
Atoms are affine combinations compared against a numeric threshold.
"""

from __future__ import annotations

import math

from .ast import (
    FALSE,
    TRUE,
    And,
    Atom,
    Eventually,
    Formula,
    FormulaError,
    Globally,
    Implies,
    Interval,
    Not,
    Or,
    Until,
)
from .lexer import STLSyntaxError, Token, TokenKind, lex


class _Parser:
    def __init__(self, tokens: list[Token], text_len: int):
        self.tokens = tokens
        self.i = 0
        self.text_len = text_len

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise STLSyntaxError(self.text_len, "unexpected end of input")
        self.i += 1
        return tok

    def at(self, kind: TokenKind, text: str | None = None) -> bool:
        tok = self.peek()
        return (
            tok is not None
            and tok.kind is kind
            and (text is None or tok.text == text)
        )

    def expect(self, kind: TokenKind, text: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise STLSyntaxError(self.text_len, f"unexpected end of input, expected {text!r}")
        if tok.kind is not kind or tok.text != text:
            raise STLSyntaxError(tok.pos, f"expected {text!r}, found {tok.text!r}")
        self.i += 1
        return tok

    # grammar levels -----------------------------------------------------

    def formula(self) -> Formula:
        return self.implies()

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.at(TokenKind.OPERATOR, "->"):
            self.next()
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        node = self.conjunction()
        while self.at(TokenKind.OPERATOR, "|"):
            self.next()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.until()
        while self.at(TokenKind.OPERATOR, "&"):
            self.next()
            node = And(node, self.until())
        return node

    def until(self) -> Formula:
        node = self.unary()
        while self.at(TokenKind.OPERATOR, "U"):
            self.next()
            iv = self.interval()
            node = Until(iv, node, self.unary())
        return node

    def unary(self) -> Formula:
        if self.at(TokenKind.OPERATOR, "!"):
            self.next()
            return Not(self.unary())
        if self.at(TokenKind.OPERATOR, "G"):
            self.next()
            return Globally(self.interval(), self.unary())
        if self.at(TokenKind.OPERATOR, "F"):
            self.next()
            return Eventually(self.interval(), self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise STLSyntaxError(self.text_len, "unexpected end of input")
        if tok.kind is TokenKind.OPERATOR and tok.text == "true":
            self.next()
            return TRUE
        if tok.kind is TokenKind.OPERATOR and tok.text == "false":
            self.next()
            return FALSE
        if tok.kind is TokenKind.DELIMITER and tok.text == "(":
            self.next()
            node = self.formula()
            self.expect(TokenKind.DELIMITER, ")")
            return node
        return self.atom()

    # pieces -------------------------------------------------------------

    def interval(self) -> Interval:
        open_tok = self.peek()
        if open_tok is None or open_tok.text != "[":
            pos = open_tok.pos if open_tok else self.text_len
            raise STLSyntaxError(pos, "temporal operator requires an interval '[l,u]'")
        self.next()
        lo_pos = self.peek().pos if self.peek() else self.text_len
        lo = self.number()
        tok = self.peek()
        if tok is None or not (tok.kind is TokenKind.DELIMITER and tok.text == ","):
            pos = tok.pos if tok else self.text_len
            raise STLSyntaxError(pos, "interval requires two bounds separated by ','")
        self.next()
        hi = self.number()
        self.expect(TokenKind.DELIMITER, "]")
        try:
            return Interval(lo, hi)
        except FormulaError as exc:
            raise STLSyntaxError(lo_pos, str(exc)) from exc

    def number(self) -> float:
        tok = self.peek()
        if tok is None:
            raise STLSyntaxError(self.text_len, "unexpected end of input, expected a number")
        if tok.kind is not TokenKind.NUMBER:
            raise STLSyntaxError(tok.pos, f"expected a number, found {tok.text!r}")
        self.next()
        value = float(tok.text)
        if not math.isfinite(value):
            raise STLSyntaxError(tok.pos, "number overflows the representable range")
        return value

    def signed_number(self) -> float:
        if self.at(TokenKind.OPERATOR, "-"):
            self.next()
            return -self.number()
        return self.number()

    def atom(self) -> Atom:
        start = self.peek()
        terms = [self.term(allow_sign=True)]
        while True:
            if self.at(TokenKind.OPERATOR, "+"):
                self.next()
                coef, var = self.term(allow_sign=False)
                terms.append((coef, var))
            elif self.at(TokenKind.OPERATOR, "-"):
                self.next()
                coef, var = self.term(allow_sign=False)
                terms.append((-coef, var))
            else:
                break
        tok = self.peek()
        if tok is None:
            raise STLSyntaxError(self.text_len, "unexpected end of input, expected a comparator")
        if tok.kind is not TokenKind.COMPARATOR:
            raise STLSyntaxError(tok.pos, f"expected a comparator, found {tok.text!r}")
        self.next()
        threshold = self.signed_number()
        try:
            return Atom(tuple(terms), tok.text, threshold)
        except FormulaError as exc:
            raise STLSyntaxError(start.pos if start else 0, str(exc)) from exc

    def term(self, allow_sign: bool) -> tuple[float, str]:
        sign = 1.0
        if allow_sign and self.at(TokenKind.OPERATOR, "-"):
            self.next()
            sign = -1.0
        tok = self.peek()
        if tok is None:
            raise STLSyntaxError(self.text_len, "unexpected end of input in expression")
        if tok.kind is TokenKind.NUMBER:
            coef = self.number()
            self.expect(TokenKind.OPERATOR, "*")
            ident = self.identifier()
            return (sign * coef, ident)
        if tok.kind is TokenKind.IDENTIFIER:
            self.next()
            return (sign, tok.text)
        raise STLSyntaxError(tok.pos, f"expected a signal term, found {tok.text!r}")

    def identifier(self) -> str:
        tok = self.peek()
        if tok is None:
            raise STLSyntaxError(self.text_len, "unexpected end of input, expected identifier")
        if tok.kind is not TokenKind.IDENTIFIER:
            raise STLSyntaxError(tok.pos, f"expected an identifier, found {tok.text!r}")
        self.next()
        return tok.text


def parse(text: str) -> Formula:
    """Parse STL surface text into a formula tree.

    Raises STLSyntaxError with a character position on malformed input,
    bad intervals (lo < 0 or lo >= hi), and number overflow.
    """
    tokens = lex(text)
    parser = _Parser(tokens, len(text))
    node = parser.formula()
    trailing = parser.peek()
    if trailing is not None:
        raise STLSyntaxError(trailing.pos, f"unexpected trailing input {trailing.text!r}")
    return node


def check_syntax(text: str) -> list[tuple[int, str]]:
    """Return [] iff the text parses; otherwise [(position, message)]."""
    try:
        parse(text)
    except STLSyntaxError as exc:
        return [(exc.pos, exc.message)]
    return []
