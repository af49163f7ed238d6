import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clarifystl import metrics
from clarifystl.gateway import HashEmbeddingProvider
from clarifystl.stl import render
from generators import random_formula


class TestFormulaAccuracy:
    def test_identity(self):
        assert metrics.formula_accuracy("G[0,5](x > 1)", "G[0,5](x > 1)") == 1.0

    def test_one_token_mismatch(self):
        score = metrics.formula_accuracy("G[0,5](x > 2)", "G[0,5](x > 1)")
        assert abs(score - 10 / 11) < 1e-9

    def test_unparseable_generated_scores_zero(self):
        assert metrics.formula_accuracy("G[0,5](x >", "G[0,5](x > 1)") == 0.0

    def test_unparseable_reference_is_an_error(self):
        with pytest.raises(metrics.MetricError):
            metrics.formula_accuracy("G[0,5](x > 1)", "G[0,5](x >")

    def test_self_accuracy_is_one_for_random_formulas(self):
        rng = random.Random(3)
        for _ in range(50):
            text = render(random_formula(rng, rng.randint(0, 3), rich_numbers=True))
            assert metrics.formula_accuracy(text, text) == 1.0
            assert metrics.template_accuracy(text, text) == 1.0


class TestTemplateAccuracy:
    def test_same_template_different_literals(self):
        assert metrics.template_accuracy("G[0,5](x > 2)", "G[0,9](y > 7)") == 1.0

    def test_operator_mismatch_only(self):
        score = metrics.template_accuracy("F[0,5](x > 2)", "G[0,9](y > 7)")
        assert abs(score - 10 / 11) < 1e-9

    def test_syntax_gate(self):
        assert metrics.template_accuracy("F[0,5](x >", "G[0,9](y > 7)") == 0.0


class TestBleu:
    def test_identical(self):
        assert metrics.bleu("G[0,5](x > 1)", "G[0,5](x > 1)") == pytest.approx(1.0)
        assert metrics.bleu("x1 > 0.2", "x1 > 0.2") == pytest.approx(1.0)

    def test_empty_generated(self):
        assert metrics.bleu("", "x1 > 0.2") == 0.0

    def test_hand_computed_smoothed_case(self):
        # precisions 3/4, 2/3, 1/2 and smoothed 4-gram (0+1)/(1+1)
        expected = (0.75 * (2 / 3) * 0.5 * 0.5) ** 0.25
        assert metrics.bleu("a b c d", "a b c e") == pytest.approx(expected, abs=1e-9)
        assert expected == pytest.approx(0.5946, abs=1e-4)

    def test_brevity_penalty(self):
        shorter = metrics.bleu("a b", "a b c d e")
        assert 0.0 < shorter < 1.0

    def test_range(self):
        rng = random.Random(11)
        for _ in range(50):
            a = render(random_formula(rng, 2))
            b = render(random_formula(rng, 2))
            assert 0.0 <= metrics.bleu(a, b) <= 1.0


class TestRougeL:
    def test_identical(self):
        assert metrics.rouge_l("what specific value", "what specific value") == 1.0

    def test_hand_computed(self):
        assert metrics.rouge_l("what value", "what specific value") == pytest.approx(0.8)

    def test_disjoint(self):
        assert metrics.rouge_l("alpha beta", "gamma delta") == 0.0


class TestBertStyle:
    def test_identical_tokens(self):
        provider = HashEmbeddingProvider(64)
        assert metrics.bert_style_score("a b c", "a b c", provider) == pytest.approx(1.0)

    def test_orthogonal(self):
        class Orthogonal:
            dimension = 4

            def embed(self, texts):
                from clarifystl.gateway import EmbeddingVector

                basis = {"a": [1, 0, 0, 0], "b": [0, 1, 0, 0], "c": [0, 0, 1, 0], "d": [0, 0, 0, 1]}
                return [EmbeddingVector(np.array(basis[t], dtype=float)) for t in texts]

        assert metrics.bert_style_score("a b", "c d", Orthogonal()) == 0.0

    def test_sixty_degrees(self):
        class Tilted:
            dimension = 2

            def embed(self, texts):
                from clarifystl.gateway import EmbeddingVector

                vecs = {"p": [1.0, 0.0], "q": [0.5, math.sqrt(3) / 2]}
                return [EmbeddingVector(np.array(vecs[t])) for t in texts]

        assert metrics.bert_style_score("p", "q", Tilted()) == pytest.approx(0.5, abs=1e-9)


class TestClassificationMetrics:
    def test_perfect(self):
        report = metrics.classification_metrics([1, 0, 1], [1, 0, 1])
        assert report.accuracy == report.f1 == 1.0

    def test_hand_computed_half(self):
        report = metrics.classification_metrics([1, 1, 0, 0], [1, 0, 0, 1])
        assert report.accuracy == report.precision == report.recall == report.f1 == 0.5

    def test_all_negative_predictions(self):
        report = metrics.classification_metrics([0, 0, 0], [1, 1, 1])
        assert report.recall == 0.0
        assert report.f1 == 0.0

    def test_length_mismatch(self):
        with pytest.raises(metrics.MetricError):
            metrics.classification_metrics([1], [1, 0])


class TestFleissKappa:
    def test_perfect_agreement(self):
        assert metrics.fleiss_kappa([[3, 0], [0, 3], [3, 0]]) == 1.0

    def test_hand_computed_negative(self):
        assert metrics.fleiss_kappa([[2, 1], [1, 2]]) == pytest.approx(-1 / 3, abs=1e-9)

    def test_single_category_degenerate(self):
        assert metrics.fleiss_kappa([[4, 0], [4, 0]]) == 1.0

    def test_unequal_rater_counts(self):
        with pytest.raises(metrics.MetricError):
            metrics.fleiss_kappa([[2, 1], [2, 2]])

    @staticmethod
    @st.composite
    def _matrices(draw):
        raters = draw(st.integers(2, 6))
        categories = draw(st.integers(2, 4))
        items = draw(st.integers(2, 8))
        rows = []
        for _ in range(items):
            row = [0] * categories
            for _ in range(raters):
                row[draw(st.integers(0, categories - 1))] += 1
            rows.append(row)
        return rows

    @given(_matrices())
    @settings(max_examples=60, deadline=None)
    def test_permutation_invariance(self, rows):
        matrix = [list(r) for r in rows]
        kappa = metrics.fleiss_kappa(matrix)
        shuffled_items = metrics.fleiss_kappa(list(reversed(matrix)))
        relabeled = metrics.fleiss_kappa([list(reversed(r)) for r in matrix])
        assert kappa == pytest.approx(shuffled_items, abs=1e-12)
        assert kappa == pytest.approx(relabeled, abs=1e-12)
