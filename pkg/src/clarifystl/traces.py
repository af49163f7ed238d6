"""Seeded trace generation around a reference formula, and semantic
robustness: the share of traces on which two formulas agree at t = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .stl.ast import Formula, intervals, temporal_depth, thresholds, variables
from .stl.parser import check_syntax, parse
from .stl.semantics import HorizonExceededError, Trace, evaluate


class TraceGenerationError(RuntimeError):
    pass


class BudgetExhaustedError(TraceGenerationError):
    """No satisfying/violating pair found within the attempt budget."""


@dataclass(frozen=True, slots=True)
class TraceConfig:
    count: int = 10
    seed: int = 0

    # generate-and-check bounds
    attempts_per_trace: int = 50
    extra_breakpoints: int = 2


@dataclass(frozen=True, slots=True)
class RobustnessReport:
    n_traces: int
    n_agree: int
    score: float
    per_trace: tuple[tuple[bool, bool], ...]
    excluded: tuple[int, ...] = field(default=())


def _as_formula(reference: str | Formula) -> Formula:
    if isinstance(reference, str):
        return parse(reference)
    return reference


def _sample_value(rng: random.Random, candidates: list[float]) -> float:
    threshold = rng.choice(candidates)
    delta = max(0.1, 0.1 * abs(threshold))
    sign = 1.0 if rng.random() < 0.5 else -1.0
    return threshold + sign * delta * (1.0 + rng.random())


def _critical_offsets(formula: Formula) -> set[float]:
    """Absolute instants (from t=0) where temporal windows open or close."""
    from .stl.ast import And, Eventually, Globally, Implies, Not, Or, Until

    offsets: set[float] = set()

    def visit(node, base: float) -> None:
        for child_base, child in _temporal_children(node, base):
            offsets.add(child_base)
            visit(child, child_base)

    def _temporal_children(node, base):
        if isinstance(node, (Globally, Eventually)):
            yield base + node.interval.lo, node.child
            yield base + node.interval.hi, node.child
        elif isinstance(node, Until):
            for side in (node.left, node.right):
                yield base + node.interval.lo, side
                yield base + node.interval.hi, side
        else:
            for child in _boolean_children(node):
                yield base, child

    def _boolean_children(node):
        if isinstance(node, Not):
            yield node.child
        elif isinstance(node, (And, Or, Implies)):
            yield node.left
            yield node.right

    visit(formula, 0.0)
    return offsets


def _build_trace(formula: Formula, rng: random.Random, config: TraceConfig) -> Trace:
    names = sorted(variables(formula))
    if not names:
        raise TraceGenerationError("formula mentions no signal variables")
    horizon = temporal_depth(formula) + 1.0
    ivs = intervals(formula)
    jitter = 0.1 * min((iv.width for iv in ivs), default=0.0)

    cuts: set[float] = set()
    for t in _critical_offsets(formula):
        jittered = t + rng.uniform(-jitter, jitter)
        if 1e-9 < jittered < horizon - 1e-9:
            cuts.add(jittered)
    for _ in range(config.extra_breakpoints):
        cuts.add(rng.uniform(0.0, 1.0) * horizon)
    points = [0.0]
    for t in sorted(cuts):
        if t - points[-1] > 1e-6 and horizon - t > 1e-6:
            points.append(t)
    points.append(horizon)

    by_var = thresholds(formula)
    all_thresholds = sorted({c for cs in by_var.values() for c in cs}) or [0.0]
    segments = len(points) - 1
    rows = []
    for name in names:
        candidates = sorted(by_var.get(name, set())) or all_thresholds
        rows.append(tuple(_sample_value(rng, candidates) for _ in range(segments)))
    return Trace(tuple(names), tuple(points), tuple(rows))


def generate_traces(
    reference: str | Formula, config: TraceConfig | None = None
) -> list[Trace]:
    """Deterministically sample traces around the reference formula.

    Breakpoints land near the formula's window endpoints (plus jitter) and
    values straddle the atom thresholds, so both verdicts appear quickly.
    The result always contains at least one satisfying and one violating
    trace at t = 0; if the attempt budget runs out first (the formula may
    admit only one verdict over step traces), BudgetExhaustedError is
    raised rather than returning a one-sided sample.
    """
    config = config or TraceConfig()
    if config.count < 2:
        raise TraceGenerationError("count must be at least 2")
    formula = _as_formula(reference)
    rng = random.Random(config.seed)

    traces: list[Trace] = []
    verdicts: list[bool] = []
    budget = config.attempts_per_trace * config.count
    for _ in range(budget):
        trace = _build_trace(formula, rng, config)
        verdict = evaluate(formula, trace, 0.0)
        if len(traces) < config.count:
            traces.append(trace)
            verdicts.append(verdict)
        elif verdict not in verdicts:
            # swap in the missing verdict for one of the majority
            swap = verdicts.index(not verdict)
            traces[swap] = trace
            verdicts[swap] = verdict
        if len(traces) == config.count and len(set(verdicts)) == 2:
            return traces
    raise BudgetExhaustedError(
        f"no {'violating' if all(verdicts) else 'satisfying'} trace found "
        f"within {budget} attempts"
    )


def semantic_robustness(
    generated: str | Formula,
    reference: str | Formula,
    traces: list[Trace],
) -> RobustnessReport:
    """Percentage of traces where both formulas give the same verdict at t=0.

    A generated formula that fails the syntax check scores 0; traces whose
    horizon cannot host either formula are excluded and reported.
    """
    if isinstance(reference, str) and check_syntax(reference):
        raise TraceGenerationError(f"reference formula does not parse: {reference!r}")
    if isinstance(generated, str) and check_syntax(generated):
        return RobustnessReport(len(traces), 0, 0.0, ())
    gen_f = _as_formula(generated)
    ref_f = _as_formula(reference)

    per_trace: list[tuple[bool, bool]] = []
    excluded: list[int] = []
    agree = 0
    for idx, trace in enumerate(traces):
        try:
            sat_ref = evaluate(ref_f, trace, 0.0)
            sat_gen = evaluate(gen_f, trace, 0.0)
        except HorizonExceededError:
            excluded.append(idx)
            continue
        per_trace.append((sat_ref, sat_gen))
        if sat_ref == sat_gen:
            agree += 1
    used = len(per_trace)
    score = 100.0 * agree / used if used else 0.0
    return RobustnessReport(used, agree, score, tuple(per_trace), tuple(excluded))


# --- dataset-file interchange ---------------------------------------------


def trace_to_record(trace: Trace) -> dict:
    return {
        "variables": list(trace.variables),
        "breakpoints": list(trace.breakpoints),
        "values": [list(row) for row in trace.values],
        "horizon": trace.horizon,
    }


def trace_from_record(record: dict) -> Trace:
    trace = Trace(
        tuple(record["variables"]),
        tuple(record["breakpoints"]),
        tuple(tuple(row) for row in record["values"]),
    )
    if "horizon" in record and float(record["horizon"]) != trace.horizon:
        raise TraceGenerationError("horizon field disagrees with final breakpoint")
    return trace
