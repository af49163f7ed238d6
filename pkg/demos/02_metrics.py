#!/usr/bin/env python3
"""All evaluation measures on small worked pairs: token-level accuracy,
BLEU, ROUGE-L, embedding F1, classification scores, agreement, and
trace-based semantic robustness."""

from clarifystl import metrics, traces
from clarifystl.gateway import HashEmbeddingProvider

generated = "G[0,5](x > 2)"
reference = "G[0,5](x > 1)"

print("== token-level scores ==")
print("formula accuracy: ", metrics.formula_accuracy(generated, reference))
print("template accuracy:", metrics.template_accuracy(generated, reference))
print("unparseable output gates to zero:",
      metrics.formula_accuracy("G[0,5](x >", reference))

print()
print("== text similarity ==")
print("bleu(identical):", metrics.bleu(reference, reference))
print("bleu(a b c d vs a b c e):", round(metrics.bleu("a b c d", "a b c e"), 4))
print("rouge_l:", metrics.rouge_l("what value", "what specific value"))
provider = HashEmbeddingProvider(128)
print("embedding F1:", round(metrics.bert_style_score(
    "what value should x2 reach", "what specific value should x2 reach", provider), 4))

print()
print("== classification and agreement ==")
report = metrics.classification_metrics([1, 1, 0, 0], [1, 0, 0, 1])
print("accuracy/precision/recall/f1:",
      report.accuracy, report.precision, report.recall, report.f1)
print("fleiss kappa (2,1)/(1,2):", round(metrics.fleiss_kappa([[2, 1], [1, 2]]), 4))
print("fleiss kappa unanimous:", metrics.fleiss_kappa([[3, 0], [0, 3]]))

print()
print("== semantic robustness over generated traces ==")
reference = "F[10,150](x1 > 0.2)"
sample = traces.generate_traces(reference, traces.TraceConfig(count=10, seed=7))
print(f"generated {len(sample)} traces (seeded, both verdicts present)")
for candidate in (reference, "F[10,150](x1 > 0.4)", "!(F[10,150](x1 > 0.2))"):
    report = traces.semantic_robustness(candidate, reference, sample)
    print(f"  {candidate:28} -> {report.score:5.1f}% agreement "
          f"({report.n_agree}/{report.n_traces})")
