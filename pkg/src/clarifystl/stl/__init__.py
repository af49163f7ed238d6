"""STL formal core: syntax trees, parsing, printing, templates, semantics."""

from .ast import (
    And,
    Atom,
    Eventually,
    FALSE,
    FalseConst,
    Formula,
    FormulaError,
    Globally,
    Implies,
    Interval,
    Not,
    Or,
    TRUE,
    TrueConst,
    Until,
    atom,
    intervals,
    temporal_depth,
    thresholds,
    variables,
    walk,
)
from .lexer import STLSyntaxError, Token, TokenKind, lex
from .parser import check_syntax, parse
from .printer import format_number, render, tokenize
from .semantics import (
    EvaluationError,
    HorizonExceededError,
    StepSignal,
    Trace,
    TraceError,
    evaluate,
    truth_signal,
)
from .template import NUM, SIG, TemplateFormula, extract_template, template_tokens

__all__ = [
    "And", "Atom", "Eventually", "FALSE", "FalseConst", "Formula",
    "FormulaError", "Globally", "Implies", "Interval", "Not", "Or", "TRUE",
    "TrueConst", "Until", "atom", "intervals", "temporal_depth", "thresholds",
    "variables", "walk",
    "STLSyntaxError", "Token", "TokenKind", "lex",
    "check_syntax", "parse",
    "format_number", "render", "tokenize",
    "EvaluationError", "HorizonExceededError", "StepSignal", "Trace",
    "TraceError", "evaluate", "truth_signal",
    "NUM", "SIG", "TemplateFormula", "extract_template", "template_tokens",
]
