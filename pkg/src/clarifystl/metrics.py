"""Evaluation measures for generated formulas, queries, and detectors.

Token-level scores (formula/template accuracy, BLEU) run over canonical
STL token streams; text scores (ROUGE-L, embedding F1) run over whitespace
tokens; classification and agreement statistics are standard.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .stl.lexer import STLSyntaxError, lex
from .stl.parser import check_syntax, parse
from .stl.printer import tokenize
from .stl.template import extract_template


class MetricError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    accuracy: float
    precision: float
    recall: float
    f1: float


def _positional_score(gen_tokens: list[str], ref_tokens: list[str]) -> float:
    matches = sum(
        1 for g, r in zip(gen_tokens, ref_tokens) if g == r
    )
    return matches / len(ref_tokens)


def formula_accuracy(generated: str, reference: str) -> float:
    """Proportion of reference tokens matched at the same positions.

    Both sides are canonicalized first; a generated formula that fails the
    syntax check scores 0.
    """
    if check_syntax(reference):
        raise MetricError(f"reference formula does not parse: {reference!r}")
    if check_syntax(generated):
        return 0.0
    gen = [t.text for t in tokenize(generated)]
    ref = [t.text for t in tokenize(reference)]
    return _positional_score(gen, ref)


def template_accuracy(generated: str, reference: str) -> float:
    """Positional token score after abstracting signals and numerals."""
    if check_syntax(reference):
        raise MetricError(f"reference formula does not parse: {reference!r}")
    if check_syntax(generated):
        return 0.0
    gen = extract_template(parse(generated)).token_texts()
    ref = extract_template(parse(reference)).token_texts()
    return _positional_score(gen, ref)


def _metric_tokens(text: str) -> list[str]:
    # Formula-shaped text gets the STL token stream; anything the lexer
    # rejects falls back to whitespace tokens.
    try:
        return [t.text for t in lex(text)]
    except STLSyntaxError:
        return text.split()


def bleu(generated: str, reference: str) -> float:
    """BLEU-4 over token streams with add-one smoothing on zero precisions.

    An n-gram order longer than the candidate contributes a neutral 1.0,
    so identical short strings still score 1.0; empty output scores 0.
    """
    gen = _metric_tokens(generated) if generated.strip() else []
    ref = _metric_tokens(reference) if reference.strip() else []
    if not gen:
        return 0.0
    if not ref:
        return 0.0
    log_sum = 0.0
    for n in range(1, 5):
        gen_ngrams = Counter(tuple(gen[i : i + n]) for i in range(len(gen) - n + 1))
        ref_ngrams = Counter(tuple(ref[i : i + n]) for i in range(len(ref) - n + 1))
        total = sum(gen_ngrams.values())
        if total == 0:
            precision = 1.0
        else:
            matched = sum(min(c, ref_ngrams[g]) for g, c in gen_ngrams.items())
            if matched == 0:
                precision = (matched + 1) / (total + 1)
            else:
                precision = matched / total
        log_sum += 0.25 * math.log(precision)
    if len(gen) >= len(ref):
        brevity = 1.0
    else:
        brevity = math.exp(1.0 - len(ref) / len(gen))
    return brevity * math.exp(log_sum)


def rouge_l(generated: str, reference: str) -> float:
    """ROUGE-L F1 over whitespace tokens via longest common subsequence."""
    gen = generated.split()
    ref = reference.split()
    if not gen or not ref:
        return 0.0
    rows = len(gen) + 1
    cols = len(ref) + 1
    table = [[0] * cols for _ in range(rows)]
    for i in range(1, rows):
        for j in range(1, cols):
            if gen[i - 1] == ref[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    lcs = table[-1][-1]
    if lcs == 0:
        return 0.0
    precision = lcs / len(gen)
    recall = lcs / len(ref)
    return 2 * precision * recall / (precision + recall)


def bert_style_score(generated: str, reference: str, provider) -> float:
    """Greedy-matching embedding F1 between token sets.

    Each token is embedded by the provider; precision is the mean over
    generated tokens of the best cosine against reference tokens, recall
    the symmetric quantity; cosines are clamped to [0, 1].
    """
    gen = generated.split()
    ref = reference.split()
    if not gen or not ref:
        return 0.0
    gen_vecs = np.stack([v.values for v in provider.embed(gen)])
    ref_vecs = np.stack([v.values for v in provider.embed(ref)])

    def unit(rows: np.ndarray) -> np.ndarray:
        norms = np.linalg.norm(rows, axis=1, keepdims=True)
        norms[norms == 0] = 1.0
        return rows / norms

    sims = unit(gen_vecs) @ unit(ref_vecs).T
    sims = np.clip(sims, 0.0, 1.0)
    precision = float(sims.max(axis=1).mean())
    recall = float(sims.max(axis=0).mean())
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def classification_metrics(predictions: list[int], labels: list[int]) -> ClassificationReport:
    """Binary accuracy/precision/recall/F1 with positive class 1."""
    if len(predictions) != len(labels):
        raise MetricError("predictions and labels must have equal length")
    if not predictions:
        raise MetricError("empty prediction list")
    tp = sum(1 for p, y in zip(predictions, labels) if p == 1 and y == 1)
    fp = sum(1 for p, y in zip(predictions, labels) if p == 1 and y == 0)
    fn = sum(1 for p, y in zip(predictions, labels) if p == 0 and y == 1)
    correct = sum(1 for p, y in zip(predictions, labels) if p == y)
    accuracy = correct / len(labels)
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = (
        2 * precision * recall / (precision + recall)
        if precision + recall
        else 0.0
    )
    return ClassificationReport(accuracy, precision, recall, f1)


def fleiss_kappa(ratings: list[list[int]]) -> float:
    """Fleiss' kappa over an items x categories matrix of rater counts.

    Every item must be rated by the same number n >= 2 of raters. The
    degenerate perfect-agreement case (expected agreement 1) returns 1.0.
    """
    if not ratings or not ratings[0]:
        raise MetricError("ratings matrix must be non-empty")
    n_raters = sum(ratings[0])
    if n_raters < 2:
        raise MetricError("each item needs at least two raters")
    for row in ratings:
        if sum(row) != n_raters:
            raise MetricError("every item must have the same rater count")
        if any(c < 0 for c in row):
            raise MetricError("rater counts must be non-negative")
    n_items = len(ratings)
    p_item = [
        (sum(c * c for c in row) - n_raters) / (n_raters * (n_raters - 1))
        for row in ratings
    ]
    p_mean = sum(p_item) / n_items
    totals = [sum(row[j] for row in ratings) for j in range(len(ratings[0]))]
    grand = n_items * n_raters
    p_expected = sum((t / grand) ** 2 for t in totals)
    if p_expected == 1.0:
        return 1.0
    return (p_mean - p_expected) / (1.0 - p_expected)
