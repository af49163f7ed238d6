"""Seeded random formulas and traces for property and acceptance tests.

Semantics instances keep every breakpoint and interval bound on a 0.25
lattice (exactly representable in binary floating point) and force one
0.25-long segment, so the oracle's half-minimum-segment grid provably
lands on every instant where any subformula's truth value can change.
"""

from __future__ import annotations

import random

from clarifystl.stl.ast import (
    And,
    Atom,
    Eventually,
    FALSE,
    Globally,
    Implies,
    Interval,
    Not,
    Or,
    TRUE,
    Until,
    temporal_depth,
    variables,
)
from clarifystl.stl.semantics import Trace

LATTICE = 0.25

VARS = ("x1", "x2", "x3")


def lattice_interval(rng: random.Random, max_hi: float = 2.0) -> Interval:
    steps = int(max_hi / LATTICE)
    lo = rng.randrange(0, steps - 1) * LATTICE
    width = rng.randrange(1, steps - int(lo / LATTICE)) * LATTICE
    return Interval(lo, lo + width)


def random_atom(rng: random.Random, names=VARS, rich_numbers: bool = False) -> Atom:
    if rich_numbers and rng.random() < 0.4:
        terms = []
        for _ in range(rng.randint(1, 2)):
            coef = rng.choice((1.0, -1.0, 2.0, 0.5, -2.5))
            terms.append((coef, rng.choice(names)))
        threshold = rng.choice((-3.25, -1.0, 0.0, 0.2, 1.0, 2.5, 45.0, round(rng.uniform(-5, 5), 2)))
        return Atom(tuple(terms), rng.choice(("<", "<=", ">", ">=")), threshold)
    threshold = rng.choice((-1.0, -0.5, 0.0, 0.2, 0.5, 1.0, 2.0))
    return Atom(((1.0, rng.choice(names)),), rng.choice(("<", "<=", ">", ">=")), threshold)


def random_formula(
    rng: random.Random,
    depth: int,
    names=VARS,
    rich_numbers: bool = False,
    allow_consts: bool = True,
    max_interval_hi: float = 2.0,
):
    if depth <= 0:
        if allow_consts and rng.random() < 0.05:
            return TRUE if rng.random() < 0.5 else FALSE
        return random_atom(rng, names, rich_numbers)
    kind = rng.choice(("atom", "not", "and", "or", "implies", "G", "F", "U"))
    if kind == "atom":
        return random_atom(rng, names, rich_numbers)
    if kind == "not":
        return Not(random_formula(rng, depth - 1, names, rich_numbers, allow_consts, max_interval_hi))
    if kind in ("and", "or", "implies"):
        left = random_formula(rng, depth - 1, names, rich_numbers, allow_consts, max_interval_hi)
        right = random_formula(rng, depth - 1, names, rich_numbers, allow_consts, max_interval_hi)
        return {"and": And, "or": Or, "implies": Implies}[kind](left, right)
    interval = lattice_interval(rng, max_interval_hi)
    if kind == "U":
        left = random_formula(rng, depth - 1, names, rich_numbers, allow_consts, max_interval_hi)
        right = random_formula(rng, depth - 1, names, rich_numbers, allow_consts, max_interval_hi)
        return Until(interval, left, right)
    child = random_formula(rng, depth - 1, names, rich_numbers, allow_consts, max_interval_hi)
    return (Globally if kind == "G" else Eventually)(interval, child)


def lattice_trace(rng: random.Random, formula, max_segments: int = 6) -> Trace:
    """Trace on the 0.25 lattice whose horizon hosts the formula at t=0."""
    needed = temporal_depth(formula) + 2 * LATTICE
    lengths = [LATTICE]  # pins the oracle grid step to 0.125
    while sum(lengths) < needed and len(lengths) < max_segments:
        lengths.append(rng.randrange(1, 7) * LATTICE)
    if sum(lengths) < needed:
        shortfall = needed - sum(lengths[:-1])
        lengths[-1] = (int(shortfall / LATTICE) + 1) * LATTICE
    breakpoints = [0.0]
    for length in lengths:
        breakpoints.append(breakpoints[-1] + length)

    names = sorted(variables(formula)) or ["x1"]
    cutoffs = sorted(
        {atom.threshold for atom in _atoms(formula)} or {0.0}
    )
    rows = []
    for _ in names:
        row = []
        for _ in lengths:
            base = rng.choice(cutoffs)
            row.append(base + rng.choice((-1.0, 1.0)) * (0.05 + rng.random()))
        rows.append(tuple(row))
    return Trace(tuple(names), tuple(breakpoints), tuple(rows))


def _atoms(formula):
    from clarifystl.stl.ast import walk

    return [n for n in walk(formula) if isinstance(n, Atom)]


def lattice_instances(seed: int, count: int, depth: int = 3):
    """Yield (formula, trace, t) triples valid at every yielded t."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        formula = random_formula(rng, rng.randint(1, depth), max_interval_hi=1.5)
        if not variables(formula):
            continue
        trace = lattice_trace(rng, formula)
        slack = trace.horizon - temporal_depth(formula)
        t_options = [0.0]
        if slack >= LATTICE:
            t_options.append(rng.randrange(0, int(slack / LATTICE) + 1) * LATTICE)
        yield formula, trace, rng.choice(t_options)
        made += 1
