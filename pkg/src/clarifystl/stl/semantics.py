"""Boolean STL semantics over finite piecewise-constant traces.

Traces are right-continuous step functions, so the truth of every
subformula is itself a right-continuous step function of time. Evaluation
computes these truth signals bottom-up; temporal quantifiers are decided
exactly on the finite set of candidate instants where a truth signal can
change (the child signal's own transition points shifted by the interval
bounds), never by sampling.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

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
    temporal_depth,
    variables,
)


class TraceError(ValueError):
    """Invalid trace construction or lookup."""


class EvaluationError(ValueError):
    """Evaluation precondition violated (unknown variable, bad time)."""


class HorizonExceededError(EvaluationError):
    """A temporal window would reach past the trace horizon."""


@dataclass(frozen=True, slots=True)
class Trace:
    """Finite-horizon multi-variable step signal.

    `breakpoints` runs 0 = t0 < ... < tm = horizon; `values[i][j]` is the
    value of `variables[i]` on segment [tj, t(j+1)), extended to the final
    instant, i.e. v(horizon) is the last segment's value.
    """

    variables: tuple[str, ...]
    breakpoints: tuple[float, ...]
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "breakpoints", tuple(float(t) for t in self.breakpoints))
        object.__setattr__(
            self, "values", tuple(tuple(float(v) for v in row) for row in self.values)
        )
        if len(self.breakpoints) < 2:
            raise TraceError("trace needs at least one segment (two breakpoints)")
        if self.breakpoints[0] != 0.0:
            raise TraceError("breakpoints must start at 0")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if not b > a:
                raise TraceError("breakpoints must be strictly increasing")
        if not math.isfinite(self.breakpoints[-1]):
            raise TraceError("horizon must be finite")
        if len(self.values) != len(self.variables):
            raise TraceError("one value row per variable required")
        segments = len(self.breakpoints) - 1
        for row in self.values:
            if len(row) != segments:
                raise TraceError(f"each variable needs {segments} segment values")
            if not all(math.isfinite(v) for v in row):
                raise TraceError("trace values must be finite")
        if len(set(self.variables)) != len(self.variables):
            raise TraceError("duplicate variable names")

    @property
    def horizon(self) -> float:
        return self.breakpoints[-1]

    def index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise EvaluationError(f"unknown variable: {var!r}") from None

    def value_at(self, var: str, t: float) -> float:
        row = self.values[self.index(var)]
        if t < 0 or t > self.horizon:
            raise EvaluationError(f"time {t} outside [0, {self.horizon}]")
        seg = min(bisect_right(self.breakpoints, t) - 1, len(row) - 1)
        return row[seg]


class StepSignal:
    """Right-continuous boolean step function on [0, end].

    `points` are the change instants (points[0] == 0); the value on
    [points[i], points[i+1]) is values[i], and values[-1] extends through
    the closed right end.
    """

    __slots__ = ("points", "values", "end")

    def __init__(self, points: list[float], values: list[bool], end: float):
        # collapse repeats so every stored point after the first is a
        # genuine transition
        cpoints = [points[0]]
        cvalues = [values[0]]
        for p, v in zip(points[1:], values[1:]):
            if v != cvalues[-1]:
                cpoints.append(p)
                cvalues.append(v)
        self.points = cpoints
        self.values = cvalues
        self.end = end

    def at(self, t: float) -> bool:
        idx = bisect_right(self.points, t) - 1
        if idx < 0:
            idx = 0
        return self.values[idx]

    def transitions_in(self, lo: float, hi: float) -> list[float]:
        """Transition instants q with lo < q <= hi."""
        i = bisect_right(self.points, lo)
        out = []
        while i < len(self.points) and self.points[i] <= hi:
            out.append(self.points[i])
            i += 1
        return out

    def all_true_on(self, a: float, b: float) -> bool:
        """Whether the signal holds on the whole closed interval [a, b]."""
        i = max(bisect_right(self.points, a) - 1, 0)
        j = max(bisect_right(self.points, b) - 1, 0)
        return all(self.values[i : j + 1])

    def exists_true_on(self, a: float, b: float) -> bool:
        i = max(bisect_right(self.points, a) - 1, 0)
        j = max(bisect_right(self.points, b) - 1, 0)
        return any(self.values[i : j + 1])


def _merge(left: StepSignal, right: StepSignal, op) -> StepSignal:
    end = min(left.end, right.end)
    points = sorted({0.0, *left.points, *right.points})
    points = [p for p in points if p <= end]
    values = [op(left.at(p), right.at(p)) for p in points]
    return StepSignal(points, values, end)


def _quantifier_signal(child: StepSignal, lo: float, hi: float, want_all: bool) -> StepSignal:
    """Signal of t ↦ (∀ or ∃) t' ∈ [t+lo, t+hi]: child(t')."""
    end = child.end - hi
    if end < 0:
        raise HorizonExceededError(
            f"temporal window [+{lo},+{hi}] does not fit the available horizon"
        )
    candidates = {0.0, end}
    for q in child.points[1:]:
        for shifted in (q - lo, q - hi):
            if 0.0 <= shifted <= end:
                candidates.add(shifted)
    points = sorted(candidates)
    if want_all:
        values = [child.all_true_on(p + lo, p + hi) for p in points]
    else:
        values = [child.exists_true_on(p + lo, p + hi) for p in points]
    return StepSignal(points, values, end)


def _until_signal(first: StepSignal, second: StepSignal, lo: float, hi: float) -> StepSignal:
    """Signal of t ↦ ∃ t' ∈ [t+lo, t+hi]: second(t') and first on all of [t, t']."""
    end = min(first.end, second.end) - hi
    if end < 0:
        raise HorizonExceededError(
            f"temporal window [+{lo},+{hi}] does not fit the available horizon"
        )
    shiftable = set(first.points[1:]) | set(second.points[1:])
    candidates = {0.0, end}
    for q in shiftable:
        for shifted in (q - lo, q - hi, q):
            if 0.0 <= shifted <= end:
                candidates.add(shifted)
    points = sorted(candidates)

    def holds_at(t: float) -> bool:
        w_lo, w_hi = t + lo, t + hi
        witness_times = [w_lo, w_hi]
        witness_times.extend(second.transitions_in(w_lo, w_hi))
        witness_times.extend(first.transitions_in(w_lo, w_hi))
        for tp in witness_times:
            if second.at(tp) and first.all_true_on(t, tp):
                return True
        return False

    values = [holds_at(p) for p in points]
    return StepSignal(points, values, end)


def truth_signal(formula: Formula, trace: Trace) -> StepSignal:
    """Exact truth signal of the formula over the trace."""
    if isinstance(formula, TrueConst):
        return StepSignal([0.0], [True], trace.horizon)
    if isinstance(formula, FalseConst):
        return StepSignal([0.0], [False], trace.horizon)
    if isinstance(formula, Atom):
        points = list(trace.breakpoints[:-1])
        rows = {var: trace.values[trace.index(var)] for _, var in formula.terms}
        values = []
        for seg in range(len(points)):
            env = {var: rows[var][seg] for var in rows}
            values.append(formula.holds(env))
        return StepSignal(points, values, trace.horizon)
    if isinstance(formula, Not):
        child = truth_signal(formula.child, trace)
        return StepSignal(list(child.points), [not v for v in child.values], child.end)
    if isinstance(formula, And):
        return _merge(
            truth_signal(formula.left, trace),
            truth_signal(formula.right, trace),
            lambda a, b: a and b,
        )
    if isinstance(formula, Or):
        return _merge(
            truth_signal(formula.left, trace),
            truth_signal(formula.right, trace),
            lambda a, b: a or b,
        )
    if isinstance(formula, Implies):
        return _merge(
            truth_signal(formula.left, trace),
            truth_signal(formula.right, trace),
            lambda a, b: (not a) or b,
        )
    if isinstance(formula, Globally):
        child = truth_signal(formula.child, trace)
        return _quantifier_signal(child, formula.interval.lo, formula.interval.hi, True)
    if isinstance(formula, Eventually):
        child = truth_signal(formula.child, trace)
        return _quantifier_signal(child, formula.interval.lo, formula.interval.hi, False)
    if isinstance(formula, Until):
        return _until_signal(
            truth_signal(formula.left, trace),
            truth_signal(formula.right, trace),
            formula.interval.lo,
            formula.interval.hi,
        )
    raise TypeError(f"not a formula node: {formula!r}")


def evaluate(formula: Formula, trace: Trace, t: float) -> bool:
    """Whether the trace satisfies the formula at time t.

    Every temporal window must fit inside the horizon: evaluation at t
    requires t + temporal_depth(formula) <= horizon, otherwise
    HorizonExceededError is raised rather than silently truncating.
    """
    if t < 0 or t > trace.horizon:
        raise EvaluationError(f"evaluation time {t} outside [0, {trace.horizon}]")
    missing = variables(formula) - set(trace.variables)
    if missing:
        raise EvaluationError(f"unknown variable: {sorted(missing)[0]!r}")
    if t + temporal_depth(formula) > trace.horizon:
        raise HorizonExceededError(
            f"evaluating at t={t} needs the signal through "
            f"t+{temporal_depth(formula)}, beyond horizon {trace.horizon}"
        )
    return truth_signal(formula, trace).at(t)
