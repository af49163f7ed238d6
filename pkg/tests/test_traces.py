import json
import random

import pytest

from clarifystl import traces
from clarifystl.stl import Not, Trace, evaluate, parse, variables, temporal_depth


class TestGeneration:
    def test_both_verdicts_present(self):
        formula = parse("F[10,150](x1 > 0.2)")
        sample = traces.generate_traces(formula, traces.TraceConfig(count=10, seed=7))
        verdicts = {evaluate(formula, t, 0.0) for t in sample}
        assert len(sample) == 10
        assert verdicts == {True, False}

    def test_deterministic_per_seed(self):
        config = traces.TraceConfig(count=6, seed=11)
        first = traces.generate_traces("G[0,5](x > 1)", config)
        second = traces.generate_traces("G[0,5](x > 1)", config)
        assert first == second
        different = traces.generate_traces("G[0,5](x > 1)", traces.TraceConfig(count=6, seed=12))
        assert first != different

    def test_horizon_hosts_the_formula(self):
        formula = parse("G[0,2](F[1,4](x > 0))")
        for trace in traces.generate_traces(formula, traces.TraceConfig(count=4, seed=0)):
            assert trace.horizon >= temporal_depth(formula)
            assert set(variables(formula)) <= set(trace.variables)

    def test_count_minimum(self):
        with pytest.raises(traces.TraceGenerationError):
            traces.generate_traces("x > 0", traces.TraceConfig(count=1, seed=0))

    def test_budget_exhausted_on_tautology(self):
        with pytest.raises(traces.BudgetExhaustedError):
            traces.generate_traces("x > 0 | x <= 0", traces.TraceConfig(count=4, seed=0))

    def test_constant_trace_examples(self):
        formula = parse("G[0,5](x > 1)")
        high = Trace(("x",), (0.0, 6.0), ((2.0,),))
        low = Trace(("x",), (0.0, 6.0), ((0.0,),))
        assert evaluate(formula, high, 0.0) is True
        assert evaluate(formula, low, 0.0) is False


class TestSemanticRobustness:
    def _sample(self, formula, count=8, seed=5):
        return traces.generate_traces(formula, traces.TraceConfig(count=count, seed=seed))

    def test_self_agreement_is_total(self):
        text = "F[10,150](x1 > 0.2)"
        sample = self._sample(parse(text))
        report = traces.semantic_robustness(text, text, sample)
        assert report.score == 100.0
        assert report.n_agree == report.n_traces == len(sample)

    def test_negation_never_agrees(self):
        formula = parse("F[10,150](x1 > 0.2)")
        sample = self._sample(formula)
        report = traces.semantic_robustness(Not(formula), formula, sample)
        assert report.score == 0.0
        assert report.n_agree == 0

    def test_worked_partial_agreement(self):
        tset = [Trace(("x",), (0.0, 6.0), ((v,),)) for v in (2.0, 0.5, -1.0, 3.0)]
        report = traces.semantic_robustness("G[0,5](x > 1)", "G[0,5](x > 0)", tset)
        assert report.score == 75.0
        assert report.per_trace == ((True, True), (True, False), (False, False), (True, True))

    def test_unparseable_generated_scores_zero(self):
        sample = [Trace(("x",), (0.0, 6.0), ((2.0,),))]
        report = traces.semantic_robustness("G[0,5](x >", "G[0,5](x > 1)", sample)
        assert report.score == 0.0

    def test_unparseable_reference_is_an_error(self):
        with pytest.raises(traces.TraceGenerationError):
            traces.semantic_robustness("x > 0", "G[0,5](x >", [])

    def test_short_horizon_traces_are_excluded_and_reported(self):
        good = Trace(("x",), (0.0, 6.0), ((2.0,),))
        short = Trace(("x",), (0.0, 2.0), ((2.0,),))
        report = traces.semantic_robustness("G[0,5](x > 1)", "G[0,5](x > 1)", [good, short])
        assert report.excluded == (1,)
        assert report.n_traces == 1
        assert report.score == 100.0


class TestTraceRecords:
    def test_round_trip(self):
        trace = Trace(("x", "y"), (0.0, 1.5, 3.0), ((1.0, -1.0), (0.2, 0.4)))
        obj = traces.trace_to_record(trace)
        assert json.loads(json.dumps(obj)) == obj
        assert traces.trace_from_record(obj) == trace

    def test_horizon_mismatch_rejected(self):
        obj = traces.trace_to_record(Trace(("x",), (0.0, 2.0), ((1.0,),)))
        obj["horizon"] = 5.0
        with pytest.raises(traces.TraceGenerationError):
            traces.trace_from_record(obj)
