#!/usr/bin/env python3
"""The full two-stage clarification loop on the running example, driven
entirely by scripted components: a numerically vague, semantically
ambiguous requirement becomes a formula after two targeted questions."""

from pathlib import Path

from clarifystl import clarify, detection, gateway
from clarifystl.stl import render

HERE = Path(__file__).parent
REQUIREMENT = (
    "During 10-150 seconds, if signal x1 exceeds 0.2, then signal x2 will "
    "decrease for the next 30 seconds"
)

fixture = gateway.load_fixture(str(HERE / "data" / "session.fixture"))
backend = gateway.ScriptedBackend(fixture)

# the fixture also scripts the two detectors' verdicts, so the whole run
# is offline and reproducible
vagueness = lambda text: detection.detect_vagueness(text, backend)
ambiguity = lambda text: detection.detect_ambiguity_prompt(text, backend)

answers = iter(["0.5", "the first time"])


def answer_source(query: clarify.ClarificationQuery) -> str:
    answer = next(answers)
    print(f"  [{query.stage}] {query.text}")
    print(f"  [user] {answer}")
    return answer


print("requirement:", REQUIREMENT)
print()
result = clarify.run_session(
    REQUIREMENT, vagueness, ambiguity, backend, answer_source
)

print()
print("phase:", result.state.phase.value)
print("clarification rounds:", len(result.requirement.revisions))
for i, revision in enumerate(result.requirement.revisions, start=1):
    print(f"  round {i}: {revision.query}")
    print(f"           -> {revision.text_after}")
print()
print("final requirement:", result.requirement.text)
print("final formula:    ", render(result.formula))

print()
print("transcript event kinds:", " ".join(e.kind for e in result.transcript))
