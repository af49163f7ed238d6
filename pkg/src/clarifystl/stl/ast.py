"""STL abstract syntax: atoms over affine expressions, Boolean connectives,
and bounded temporal operators with closed non-singular intervals.

All nodes are immutable; structural equality is field-by-field equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

COMPARATORS = ("<", "<=", ">", ">=")


class FormulaError(ValueError):
    """Invalid formula construction (bad interval, bad atom, ...)."""


class Node:
    """Base class for formula nodes; provides operator sugar for tests/demos."""

    __slots__ = ()

    def __invert__(self) -> "Not":
        return Not(self)

    def __and__(self, other: "Node") -> "And":
        return And(self, other)

    def __or__(self, other: "Node") -> "Or":
        return Or(self, other)

    def __rshift__(self, other: "Node") -> "Implies":
        return Implies(self, other)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed time interval [lo, hi] with 0 <= lo < hi, both finite."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise FormulaError("interval bounds must be finite")
        if lo < 0:
            raise FormulaError("interval lower bound must be non-negative")
        if hi <= lo:
            raise FormulaError("interval lower bound must be less than upper bound")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True, slots=True)
class Atom(Node):
    """Affine inequality: sum(coef * variable) CMP threshold."""

    terms: tuple[tuple[float, str], ...]
    comparator: str
    threshold: float

    def __post_init__(self) -> None:
        terms = tuple((float(c), v) for c, v in self.terms)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "threshold", float(self.threshold))
        if not terms:
            raise FormulaError("atom needs at least one term")
        for coef, var in terms:
            if not math.isfinite(coef):
                raise FormulaError("atom coefficient must be finite")
            if not IDENT_RE.match(var):
                raise FormulaError(f"invalid variable identifier: {var!r}")
        if self.comparator not in COMPARATORS:
            raise FormulaError(f"unsupported comparator: {self.comparator!r}")
        if not math.isfinite(self.threshold):
            raise FormulaError("atom threshold must be finite")

    def holds(self, values: dict[str, float]) -> bool:
        lhs = sum(coef * values[var] for coef, var in self.terms)
        if self.comparator == "<":
            return lhs < self.threshold
        if self.comparator == "<=":
            return lhs <= self.threshold
        if self.comparator == ">":
            return lhs > self.threshold
        return lhs >= self.threshold


def atom(var: str, comparator: str, threshold: float) -> Atom:
    """Single-variable atom shorthand: atom('x', '>', 0.2) is x > 0.2."""
    return Atom(((1.0, var),), comparator, threshold)


@dataclass(frozen=True, slots=True)
class TrueConst(Node):
    pass


@dataclass(frozen=True, slots=True)
class FalseConst(Node):
    pass


TRUE = TrueConst()
FALSE = FalseConst()


@dataclass(frozen=True, slots=True)
class Not(Node):
    child: Node


@dataclass(frozen=True, slots=True)
class And(Node):
    left: Node
    right: Node


@dataclass(frozen=True, slots=True)
class Or(Node):
    left: Node
    right: Node


@dataclass(frozen=True, slots=True)
class Implies(Node):
    left: Node
    right: Node


@dataclass(frozen=True, slots=True)
class Globally(Node):
    interval: Interval
    child: Node


@dataclass(frozen=True, slots=True)
class Eventually(Node):
    interval: Interval
    child: Node


@dataclass(frozen=True, slots=True)
class Until(Node):
    interval: Interval
    left: Node
    right: Node


Formula = Node


def walk(formula: Node):
    """Yield every node of the formula tree, parent before children."""
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or, Implies)):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, (Globally, Eventually)):
            stack.append(node.child)
        elif isinstance(node, Until):
            stack.append(node.right)
            stack.append(node.left)


def variables(formula: Node) -> set[str]:
    """All signal variable names mentioned by the formula's atoms."""
    out: set[str] = set()
    for node in walk(formula):
        if isinstance(node, Atom):
            out.update(var for _, var in node.terms)
    return out


def thresholds(formula: Node) -> dict[str, set[float]]:
    """Per-variable atom thresholds, used to steer trace generation."""
    out: dict[str, set[float]] = {}
    for node in walk(formula):
        if isinstance(node, Atom):
            for _, var in node.terms:
                out.setdefault(var, set()).add(node.threshold)
    return out


def intervals(formula: Node) -> list[Interval]:
    out = []
    for node in walk(formula):
        if isinstance(node, (Globally, Eventually, Until)):
            out.append(node.interval)
    return out


def temporal_depth(formula: Node) -> float:
    """Maximum nested sum of interval upper bounds.

    Evaluating the formula at time t touches the signal no later than
    t + temporal_depth(formula); a trace must extend at least that far.
    """
    if isinstance(node := formula, (Atom, TrueConst, FalseConst)):
        return 0.0
    if isinstance(node, Not):
        return temporal_depth(node.child)
    if isinstance(node, (And, Or, Implies)):
        return max(temporal_depth(node.left), temporal_depth(node.right))
    if isinstance(node, (Globally, Eventually)):
        return node.interval.hi + temporal_depth(node.child)
    if isinstance(node, Until):
        return node.interval.hi + max(
            temporal_depth(node.left), temporal_depth(node.right)
        )
    raise TypeError(f"not a formula node: {node!r}")
