"""Requirements-to-STL toolkit.

Subpackages and modules:

- ``stl``: formula syntax trees, parser, canonical printer, templates, and
  Boolean monitoring over piecewise-constant traces.
- ``metrics``: token-level and semantic evaluation measures plus agreement
  statistics.
- ``traces``: seeded trace generation and semantic-robustness scoring.
- ``dataset``: mutation operators that plant vagueness/ambiguity into clean
  NL-STL pairs, the syntactic validator, and dataset file I/O.
- ``detection``: rule and prompt-based vagueness detectors and the
  triplet-trained ambiguity classifier.
- ``clarify``: clarification queries, candidate sampling, back-translation,
  discrepancy analysis, and the two-stage interactive session.
- ``gateway``: completion/embedding providers (remote, scripted, hashed).
"""

__version__ = "0.1.0"
