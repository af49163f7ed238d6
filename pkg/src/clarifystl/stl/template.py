"""Template abstraction: signal names become SIG, numeric literals NUM.

Structure and comparators are preserved, so formulas differing only in
identifiers and numbers share one template.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ast import (
    And,
    Atom,
    Eventually,
    FalseConst,
    Formula,
    Globally,
    Implies,
    Not,
    Or,
    TrueConst,
    Until,
)
from .lexer import Token, lex

SIG = "SIG"
NUM = "NUM"


@dataclass(frozen=True, slots=True)
class TemplateFormula:
    """Canonical template text plus its token stream."""

    text: str
    tokens: tuple[Token, ...] = field(compare=False, default=())

    def token_texts(self) -> list[str]:
        return [tok.text for tok in self.tokens]


def _template_interval() -> str:
    return f"[{NUM},{NUM}]"


def _template_atom(node: Atom) -> str:
    parts: list[str] = []
    for idx, (coef, _) in enumerate(node.terms):
        body = SIG if abs(coef) == 1.0 else f"{NUM} * {SIG}"
        if idx == 0:
            parts.append(f"-{body}" if coef < 0 else body)
        else:
            parts.append(f"- {body}" if coef < 0 else f"+ {body}")
    return f"{' '.join(parts)} {node.comparator} {NUM}"


def _template_text(node: Formula) -> str:
    # Mirrors the canonical renderer's parenthesization exactly.
    from .printer import _prec, _PREC_AND, _PREC_IMPLIES, _PREC_OR, _PREC_UNTIL

    def wrap(child: Formula, parent_prec: int, tight: bool) -> str:
        text = go(child)
        prec = _prec(child)
        if prec < parent_prec or (tight and prec == parent_prec):
            return f"({text})"
        return text

    def go(n: Formula) -> str:
        if isinstance(n, TrueConst):
            return "true"
        if isinstance(n, FalseConst):
            return "false"
        if isinstance(n, Atom):
            return _template_atom(n)
        if isinstance(n, Not):
            return f"!({go(n.child)})"
        if isinstance(n, Globally):
            return f"G{_template_interval()}({go(n.child)})"
        if isinstance(n, Eventually):
            return f"F{_template_interval()}({go(n.child)})"
        if isinstance(n, Until):
            return (
                f"{wrap(n.left, _PREC_UNTIL, False)} U{_template_interval()} "
                f"{wrap(n.right, _PREC_UNTIL, True)}"
            )
        if isinstance(n, And):
            return f"{wrap(n.left, _PREC_AND, False)} & {wrap(n.right, _PREC_AND, True)}"
        if isinstance(n, Or):
            return f"{wrap(n.left, _PREC_OR, False)} | {wrap(n.right, _PREC_OR, True)}"
        if isinstance(n, Implies):
            return f"{wrap(n.left, _PREC_IMPLIES, True)} -> {wrap(n.right, _PREC_IMPLIES, False)}"
        raise TypeError(f"not a formula node: {n!r}")

    return go(node)


def extract_template(source: Formula | TemplateFormula) -> TemplateFormula:
    """Replace identifiers with SIG and numeric literals with NUM.

    Applying it to an already-extracted template is a fixpoint.
    """
    if isinstance(source, TemplateFormula):
        return TemplateFormula(source.text, source.tokens)
    text = _template_text(source)
    return TemplateFormula(text, tuple(lex(text)))


def template_tokens(source: Formula | TemplateFormula) -> list[Token]:
    return list(extract_template(source).tokens)
