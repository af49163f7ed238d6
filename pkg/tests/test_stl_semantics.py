import random

import pytest

from clarifystl.stl import (
    And,
    EvaluationError,
    Eventually,
    FALSE,
    Globally,
    HorizonExceededError,
    Implies,
    Interval,
    Not,
    Or,
    TRUE,
    Trace,
    TraceError,
    Until,
    atom,
    evaluate,
    parse,
    temporal_depth,
)
from generators import lattice_instances, random_formula, lattice_trace
from grid_oracle import grid_evaluate

STEP_TRACE = Trace(("x",), (0.0, 1.0, 3.0), ((-1.0, 1.0),))


class TestWorkedExamples:
    def test_eventually_true(self):
        formula = parse("F[0,2](x > 0)")
        assert grid_evaluate(formula, STEP_TRACE, 0.0, step=0.25) is True
        assert evaluate(formula, STEP_TRACE, 0.0) is True

    def test_globally_false(self):
        formula = parse("G[0,2](x > 0)")
        assert grid_evaluate(formula, STEP_TRACE, 0.0, step=0.25) is False
        assert evaluate(formula, STEP_TRACE, 0.0) is False

    def test_constants(self):
        assert evaluate(FALSE, STEP_TRACE, 1.5) is False
        assert evaluate(Not(FALSE), STEP_TRACE, 1.5) is True


class TestTraceInvariants:
    def test_right_continuity_and_final_instant(self):
        assert STEP_TRACE.value_at("x", 0.0) == -1.0
        assert STEP_TRACE.value_at("x", 0.999) == -1.0
        assert STEP_TRACE.value_at("x", 1.0) == 1.0
        assert STEP_TRACE.value_at("x", 3.0) == 1.0

    def test_construction_guards(self):
        with pytest.raises(TraceError):
            Trace(("x",), (0.5, 1.0), ((1.0,),))
        with pytest.raises(TraceError):
            Trace(("x",), (0.0, 1.0, 1.0), ((1.0, 2.0),))
        with pytest.raises(TraceError):
            Trace(("x",), (0.0, 1.0), ((1.0, 2.0),))
        with pytest.raises(TraceError):
            Trace(("x", "x"), (0.0, 1.0), ((1.0,), (2.0,)))


class TestPreconditions:
    def test_unknown_variable(self):
        with pytest.raises(EvaluationError, match="unknown variable"):
            evaluate(parse("y > 0"), STEP_TRACE, 0.0)

    def test_time_out_of_range(self):
        with pytest.raises(EvaluationError):
            evaluate(parse("x > 0"), STEP_TRACE, 3.5)
        with pytest.raises(EvaluationError):
            evaluate(parse("x > 0"), STEP_TRACE, -0.1)

    def test_horizon_strictness(self):
        # window [0,2] from t=1.5 reaches 3.5 > horizon 3: loud failure
        with pytest.raises(HorizonExceededError):
            evaluate(parse("G[0,2](x > 0)"), STEP_TRACE, 1.5)
        # nested windows accumulate
        with pytest.raises(HorizonExceededError):
            evaluate(parse("G[0,2](F[0,2](x > 0))"), STEP_TRACE, 0.0)
        assert evaluate(parse("G[0,2](x > 0)"), STEP_TRACE, 1.0) in (True, False)

    def test_temporal_depth(self):
        assert temporal_depth(parse("x > 0")) == 0.0
        assert temporal_depth(parse("G[0,2](F[1,4](x > 0))")) == 6.0
        assert temporal_depth(parse("x > 0 U[0,3] (G[0,2](x > 0))")) == 5.0


class TestNestedExactness:
    def test_inner_transition_between_breakpoints(self):
        # inner G[0.5,0.7] truth flips at 0.3 and 0.9, strictly between the
        # trace breakpoints; sampling only breakpoints would say True
        trace = Trace(("x",), (0.0, 1.0, 1.4, 3.0), ((1.0, 0.0, 1.0),))
        formula = parse("G[0,1](G[0.5,0.7](x > 0))")
        assert evaluate(formula, trace, 0.0) is False

    def test_until_includes_left_endpoint_of_first_operand(self):
        # the until condition quantifies the first operand from t itself
        trace = Trace(("x", "y"), (0.0, 1.0, 2.0), ((0.0, 1.0), (1.0, 1.0)))
        formula = parse("x > 0 U[1,2] y > 0")
        assert evaluate(formula, trace, 0.0) is False

    def test_until_window_right_endpoint_inclusive(self):
        trace = Trace(("y",), (0.0, 2.0, 2.5), ((0.0, 1.0),))
        formula = parse("true U[0,2] y > 0")
        assert evaluate(formula, trace, 0.0) is True


class TestOracleEquivalence:
    def test_random_instances(self):
        for formula, trace, t in lattice_instances(seed=1234, count=250):
            assert evaluate(formula, trace, t) == grid_evaluate(formula, trace, t)


class TestLaws:
    def _pairs(self, seed, count):
        rng = random.Random(seed)
        for _ in range(count):
            formula = random_formula(rng, rng.randint(0, 2), max_interval_hi=1.5)
            probe = random_formula(rng, 1, max_interval_hi=1.5)
            # the trace must cover both formulas' variables and depths
            host = Globally(Interval(0, 1.5), And(formula, probe))
            trace = lattice_trace(rng, host)
            yield formula, probe, trace

    def test_sugar_laws(self):
        for a, b, trace in self._pairs(5150, 150):
            desugared_or = Not(And(Not(a), Not(b)))
            assert evaluate(Or(a, b), trace, 0.0) == evaluate(desugared_or, trace, 0.0)
            desugared_implies = Or(Not(a), b)
            assert evaluate(Implies(a, b), trace, 0.0) == evaluate(desugared_implies, trace, 0.0)

    def test_temporal_dualities(self):
        interval = Interval(0.25, 1.25)
        for a, _, trace in self._pairs(6021, 150):
            eventually = Eventually(interval, a)
            as_until = Until(interval, TRUE, a)
            assert evaluate(eventually, trace, 0.0) == evaluate(as_until, trace, 0.0)
            globally = Globally(interval, a)
            dual = Not(Eventually(interval, Not(a)))
            assert evaluate(globally, trace, 0.0) == evaluate(dual, trace, 0.0)
