#!/usr/bin/env python3
"""Train the triplet-contrastive ambiguity classifier on a synthetic
two-cluster embedding set, inspect the loss curve, and round-trip the
model file."""

import tempfile

from clarifystl import detection
from clarifystl.synthetic import synthetic_clusters

train, test, provider = synthetic_clusters(dim=32, train=400, test=100, seed=2024)
config = detection.TrainingConfig(epochs=10, batch=16, lr=0.01, margin=1.0, seed=2024)

model, log = detection.train_ambiguity_model(train, provider, config)

print("== training log (mean per-epoch losses) ==")
for stats in log:
    print(f"  epoch {stats.epoch}: triplet={stats.mean_triplet_loss:.4f} "
          f"cross-entropy={stats.mean_cross_entropy:.4f}")

hits = 0
for text, label in test:
    result = detection.classify_ambiguity(model, text, provider)
    hits += int(result.is_defective == bool(label))
print(f"\nheld-out accuracy: {hits / len(test):.2%} on {len(test)} samples")

sample, label = test[0]
result = detection.classify_ambiguity(model, sample, provider)
print(f"sample {sample!r}: P(ambiguous)={result.confidence:.3f} "
      f"defective={result.is_defective} (true label {label})")

with tempfile.NamedTemporaryFile(suffix=".bin") as handle:
    detection.save_model(handle.name, model)
    loaded = detection.load_model(handle.name)
    vec = provider.embed([sample])[0].values
    print("saved+reloaded probability matches:",
          abs(loaded.probability_ambiguous(vec) - model.probability_ambiguous(vec)) < 1e-6)
