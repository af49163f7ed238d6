#!/usr/bin/env python3
"""Build a defect corpus: plant vagueness and referential ambiguity into
clean NL-STL pairs, validate every mutant, and cross-check with the rule
detector."""

from clarifystl import dataset, detection

corpus = [
    dataset.DatasetRecord(
        id="c1",
        nl=(
            "During 10-150 seconds, if signal x1 exceeds 0.2, then signal x2 "
            "will stay below 0.5 for the next 30 seconds"
        ),
        stl="F[10,150](x1 > 0.2) -> G[0,30](x2 < 0.5)",
    ),
    dataset.DatasetRecord(
        id="c2",
        nl="signal rpm exceeds 2700 and rpm stays above 2000 while speed remains below 45",
        stl="G[0,12](rpm > 2700 & speed < 45)",
    ),
    dataset.DatasetRecord(
        id="c3",
        nl="if the pressure exceeds 80 then the valve opens within 3 seconds",
        stl="G[0,60](pressure > 80 -> F[0,3](valve > 0))",
    ),
]

plan = dataset.MutationPlan(temporal=2, numerical=2, conditional=2, referential=1, seed=11)
records, report = dataset.build_dataset(corpus, plan)

print("== build report ==")
for defect_type, stats in report.per_type.items():
    print(f"  {defect_type}: applied={stats.applied} skipped={stats.skipped} "
          f"rejected={stats.rejected}")
for note in report.partial:
    print("  note:", note)

print()
print("== mutants ==")
for record in records:
    if record.label == "clean":
        continue
    types = ",".join(sorted(record.defect_types))
    print(f"[{record.label}:{types}] (parent {record.parent_id})")
    print("   ", record.nl)
    assert dataset.validate_nl(record.nl).ok
    if record.label == "vague":
        flagged = detection.rule_detect_vagueness(record.nl)
        print("    rule detector:", sorted(flagged.types))

print()
print("every emitted mutant passed the syntactic validator")
