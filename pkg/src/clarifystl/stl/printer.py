"""Canonical rendering and tokenization of formulas.

The canonical text is the interchange format everywhere (datasets, API,
CLI): minimal parentheses, single spaces around binary operators, numbers
in shortest decimal form. `parse(render(f))` is structurally equal to `f`.
"""

from __future__ import annotations

from decimal import Decimal

from .ast import (
    And,
    Atom,
    Eventually,
    FalseConst,
    Formula,
    Globally,
    Implies,
    Interval,
    Not,
    Or,
    TrueConst,
    Until,
)
from .lexer import Token, lex
from .parser import parse

# Binding strength per node; parentheses appear only where re-parsing
# would otherwise regroup.
_PREC_IMPLIES = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_UNTIL = 4
_PREC_UNARY = 5
_PREC_ATOM = 6


def format_number(value: float) -> str:
    """Shortest decimal form without exponent; trims trailing zeros."""
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    text = repr(float(value))
    if "e" in text or "E" in text:
        text = format(Decimal(text), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text or "0"


def _format_interval(iv: Interval) -> str:
    return f"[{format_number(iv.lo)},{format_number(iv.hi)}]"


def _prec(node: Formula) -> int:
    if isinstance(node, Implies):
        return _PREC_IMPLIES
    if isinstance(node, Or):
        return _PREC_OR
    if isinstance(node, And):
        return _PREC_AND
    if isinstance(node, Until):
        return _PREC_UNTIL
    if isinstance(node, (Not, Globally, Eventually)):
        return _PREC_UNARY
    return _PREC_ATOM


def _render_atom(node: Atom) -> str:
    parts: list[str] = []
    for idx, (coef, var) in enumerate(node.terms):
        mag = abs(coef)
        body = var if mag == 1.0 else f"{format_number(mag)} * {var}"
        if idx == 0:
            parts.append(f"-{body}" if coef < 0 else body)
        else:
            parts.append(f"- {body}" if coef < 0 else f"+ {body}")
    lhs = " ".join(parts)
    return f"{lhs} {node.comparator} {format_number(node.threshold)}"


def _render(node: Formula) -> str:
    if isinstance(node, TrueConst):
        return "true"
    if isinstance(node, FalseConst):
        return "false"
    if isinstance(node, Atom):
        return _render_atom(node)
    if isinstance(node, Not):
        return f"!({_render(node.child)})"
    if isinstance(node, Globally):
        return f"G{_format_interval(node.interval)}({_render(node.child)})"
    if isinstance(node, Eventually):
        return f"F{_format_interval(node.interval)}({_render(node.child)})"
    if isinstance(node, Until):
        left = _wrap(node.left, _PREC_UNTIL, tight=False)
        right = _wrap(node.right, _PREC_UNTIL, tight=True)
        return f"{left} U{_format_interval(node.interval)} {right}"
    if isinstance(node, And):
        return f"{_wrap(node.left, _PREC_AND, False)} & {_wrap(node.right, _PREC_AND, True)}"
    if isinstance(node, Or):
        return f"{_wrap(node.left, _PREC_OR, False)} | {_wrap(node.right, _PREC_OR, True)}"
    if isinstance(node, Implies):
        return f"{_wrap(node.left, _PREC_IMPLIES, True)} -> {_wrap(node.right, _PREC_IMPLIES, False)}"
    raise TypeError(f"not a formula node: {node!r}")


def _wrap(node: Formula, parent_prec: int, tight: bool) -> str:
    """Parenthesize an operand when re-parsing would regroup it.

    `tight` marks the side the operator does not associate towards, where
    equal precedence also needs parentheses.
    """
    text = _render(node)
    prec = _prec(node)
    if prec < parent_prec or (tight and prec == parent_prec):
        return f"({text})"
    return text


def render(formula: Formula) -> str:
    """Canonical text for a formula."""
    return _render(formula)


def tokenize(source: str | Formula) -> list[Token]:
    """Deterministic token stream over the canonical rendering.

    Accepts surface text (parsed first; errors propagate) or a formula.
    """
    if isinstance(source, str):
        source = parse(source)
    return lex(render(source))
