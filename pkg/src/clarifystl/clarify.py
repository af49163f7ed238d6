"""Two-stage clarification: vagueness queries, then ambiguity queries
driven by candidate sampling, fixed-scheme back-translation, and
discrepancy analysis, ending in the NL-to-STL transformation.

The session is an explicit state machine (start / submit_answer) so the
same engine serves scripted runs, the terminal, and the HTTP API.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .detection import DetectionResult
from .gateway import CompletionRequest, request
from .stl.ast import (
    And,
    Atom,
    Eventually,
    FalseConst,
    Formula,
    Globally,
    Implies,
    Not,
    Or,
    TrueConst,
    Until,
)
from .stl.parser import check_syntax, parse
from .stl.printer import format_number, render


class ClarificationError(RuntimeError):
    pass


class UnusableAnswerError(ClarificationError):
    """The refinement backend signalled that the answer does not address
    the query; the caller should re-ask."""


@dataclass(frozen=True, slots=True)
class Revision:
    text_before: str
    query: str
    answer: str
    text_after: str


@dataclass(frozen=True, slots=True)
class Requirement:
    id: str
    text: str
    revisions: tuple[Revision, ...] = ()

    def __post_init__(self) -> None:
        if self.revisions and self.revisions[-1].text_after != self.text:
            raise ClarificationError("requirement text must equal the last revision")

    def refined(self, query: str, answer: str, new_text: str) -> "Requirement":
        revision = Revision(self.text, query, answer, new_text)
        return Requirement(self.id, new_text, self.revisions + (revision,))


@dataclass(frozen=True, slots=True)
class ClarificationQuery:
    stage: str  # "Vagueness" | "Ambiguity"
    text: str
    target: str | None = None

    def __post_init__(self) -> None:
        text = self.text.strip()
        if not text:
            raise ClarificationError("query text must be non-empty")
        if not text.endswith("?"):
            text += "?"
        object.__setattr__(self, "text", text)


@dataclass(frozen=True, slots=True)
class CandidateSet:
    formulas: tuple[Formula, ...]
    descriptions: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.descriptions and len(self.descriptions) != len(self.formulas):
            raise ClarificationError("one description per candidate formula")

    @property
    def n(self) -> int:
        return len(self.formulas)


@dataclass(frozen=True, slots=True)
class DivergencePoint:
    aspect: str
    interpretations: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.interpretations)) < 2:
            raise ClarificationError("a divergence point needs at least two readings")


@dataclass(frozen=True, slots=True)
class DiscrepancyReport:
    divergence_points: tuple[DivergencePoint, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.divergence_points


class Phase(Enum):
    VAGUENESS = "VaguenessLoop"
    AMBIGUITY = "AmbiguityLoop"
    TRANSFORMING = "Transforming"
    DONE = "Done"
    ABORTED = "Aborted"


@dataclass(frozen=True, slots=True)
class SessionConfig:
    max_iterations_per_phase: int = 10
    candidate_n: int = 3
    sampling_temperature: float = 0.9
    resample_budget_factor: int = 3


@dataclass(slots=True)
class SessionState:
    phase: Phase = Phase.VAGUENESS
    vagueness_iterations: int = 0
    ambiguity_iterations: int = 0
    config: SessionConfig = field(default_factory=SessionConfig)


@dataclass(frozen=True, slots=True)
class TranscriptEvent:
    seq: int
    phase: str
    kind: str
    payload: dict

    def to_object(self) -> dict:
        return {"seq": self.seq, "phase": self.phase, "kind": self.kind, "payload": self.payload}


def export_transcript(path: str, events: list[TranscriptEvent]) -> None:
    """One event object per line, dataset-file style."""
    with open(path, "w", encoding="utf-8") as handle:
        for event in events:
            handle.write(json.dumps(event.to_object(), ensure_ascii=False) + "\n")


# --- operation tags ----------------------------------------------------------

VAGUENESS_QUERY_TAG = "vagueness_query"
AMBIGUITY_QUERY_TAG = "ambiguity_query"
REFINE_TAG = "refine"
CANDIDATES_TAG = "candidates"
DISCREPANCY_TAG = "discrepancy"
TRANSFORM_TAG = "transform"
BACK_TRANSLATE_TAG = "back_translate"

UNUSABLE_MARKER = "UNUSABLE_ANSWER"
NO_VAGUENESS_MARKER = "NO_VAGUENESS"
NO_AMBIGUITY_MARKER = "NO_AMBIGUITY"


# --- vagueness inquirer -------------------------------------------------------

_VAGUENESS_DEMOS = {
    "Temporal": (
        (
            "The system shall shut down soon after overheating is detected",
            "the time bound for the shutdown is not specified",
            "Within how many seconds after overheating is detected should the system shut down?",
        ),
        (
            "The valve must eventually close once the tank is full",
            "no time window is given for when the closing must happen",
            "Within what time interval after the tank is full must the valve close?",
        ),
    ),
    "Numerical": (
        (
            "The pressure should stay low during startup",
            "the numeric threshold for low pressure is missing",
            "What specific value should the pressure stay below during startup?",
        ),
        (
            "signal x2 will decrease for the next 30 seconds",
            "the amount by which the signal decreases is not given",
            "What specific value should signal x2 decrease?",
        ),
    ),
    "ConditionalLogic": (
        (
            "Speed above 80, the alarm sounds",
            "the logical relationship between the two statements is not stated",
            "Should the alarm sound whenever the speed is above 80, as an if-then rule?",
        ),
        (
            "The heater runs, the window stays closed",
            "it is unclear whether one statement is a condition for the other",
            "Does the heater running require the window to be closed, or are these independent?",
        ),
    ),
}

_VAGUENESS_QUERY_INSTRUCTION = (
    "You help a requirements engineer complete an underspecified "
    "requirement. Think step by step about which concrete piece of "
    "information is missing, then write one precise clarification "
    "question that elicits exactly that information. Focus only on the "
    "reported vagueness type and the missing component; do not introduce "
    "information unrelated to the detected vague segment. If the "
    f"requirement is actually complete, reply exactly {NO_VAGUENESS_MARKER}. "
    "Reply with the question only."
)


def generate_vagueness_query(
    requirement: Requirement, vtype: str, backend
) -> ClarificationQuery | None:
    """Ask one targeted question about the reported vagueness type.

    Returns None when the backend invokes the escape clause (the
    requirement is complete after all); the caller passes it through.
    """
    demos = _VAGUENESS_DEMOS.get(vtype, ())
    demo_text = "\n\n".join(
        f"Reference requirement: {req}\nWhy it is incomplete: {reason}\nReference query: {query}"
        for req, reason, query in demos
    )
    user = (
        f"{demo_text}\n\n"
        f"Requirement: {requirement.text}\n"
        f"Vagueness type: {vtype}\n"
        "Clarification question:"
    )
    reply = backend.complete(
        request(VAGUENESS_QUERY_TAG, _VAGUENESS_QUERY_INSTRUCTION, user)
    ).strip()
    if not reply:
        raise ClarificationError("vagueness inquirer returned an empty reply")
    if reply == NO_VAGUENESS_MARKER:
        return None
    return ClarificationQuery("Vagueness", reply, target=vtype)


# --- candidate sampling -------------------------------------------------------

_TRANSFORM_DEMOS = (
    (
        "In the following 12 seconds, whenever the speed is higher than 45, "
        "the engine speed should drop below 2700 within four seconds",
        "G[0,12](speed > 45 -> F[1,4](rpm < 2700))",
    ),
    (
        "signal x stays below 3.5 during the first 10 seconds",
        "G[0,10](x < 3.5)",
    ),
    (
        "y rises above 1 at some time within 5 seconds",
        "F[0,5](y > 1)",
    ),
)

_TRANSFORM_INSTRUCTION = (
    "Translate the natural language requirement into a formula of bounded "
    "temporal logic. Use the grammar: atoms `signal CMP number` with CMP "
    "in {<, <=, >, >=}; connectives `!`, `&`, `|`, `->`; temporal "
    "operators `G[l,u]`, `F[l,u]`, and infix `U[l,u]` with 0 <= l < u. "
    "Reply with the formula only."
)


def _transform_user_prompt(text: str) -> str:
    demos = "\n\n".join(f"Requirement: {nl}\nFormula: {stl}" for nl, stl in _TRANSFORM_DEMOS)
    return f"{demos}\n\nRequirement: {text}\nFormula:"


def sample_candidates(
    requirement: Requirement,
    n: int,
    backend,
    temperature: float = 0.9,
    resample_budget_factor: int = 3,
) -> CandidateSet:
    """Sample n candidate formulas at high temperature; each reply must
    pass the syntax check, with failed replies resampled up to a budget."""
    if n < 1:
        raise ClarificationError("candidate count must be at least 1")
    formulas: list[Formula] = []
    attempts = 0
    budget = resample_budget_factor * n
    user = _transform_user_prompt(requirement.text)
    while len(formulas) < n and attempts < budget:
        attempts += 1
        reply = backend.complete(
            request(CANDIDATES_TAG, _TRANSFORM_INSTRUCTION, user, temperature=temperature)
        ).strip()
        if check_syntax(reply):
            continue
        formulas.append(parse(reply))
    if not formulas:
        raise ClarificationError(f"no parseable candidate within {budget} attempts")
    return CandidateSet(tuple(formulas))


# --- back-translation ---------------------------------------------------------

_CMP_WORDS = {">": "above", "<": "below", ">=": "at least", "<=": "at most"}


def _atom_phrase(node: Atom) -> str:
    if len(node.terms) == 1 and abs(node.terms[0][0]) == 1.0:
        coef, var = node.terms[0]
        name = var if coef > 0 else f"-{var}"
    else:
        parts = []
        for idx, (coef, var) in enumerate(node.terms):
            body = var if abs(coef) == 1.0 else f"{format_number(abs(coef))} * {var}"
            if idx == 0:
                parts.append(f"-{body}" if coef < 0 else body)
            else:
                parts.append(f"- {body}" if coef < 0 else f"+ {body}")
        name = " ".join(parts)
    return f"signal {name} is {_CMP_WORDS[node.comparator]} {format_number(node.threshold)}"


def _needs_brackets(node: Formula) -> bool:
    return isinstance(node, (And, Or, Implies, Until))


def _describe(node: Formula) -> str:
    if isinstance(node, TrueConst):
        return "the always-true condition holds"
    if isinstance(node, FalseConst):
        return "the never-true condition holds"
    if isinstance(node, Atom):
        return _atom_phrase(node)
    if isinstance(node, Not):
        return f"it is not the case that {_wrap_desc(node.child)}"
    if isinstance(node, Globally):
        iv = node.interval
        return (
            f"At every time in [{format_number(iv.lo)}, {format_number(iv.hi)}] seconds, "
            f"{_wrap_desc(node.child)}"
        )
    if isinstance(node, Eventually):
        iv = node.interval
        return (
            f"At some time in [{format_number(iv.lo)}, {format_number(iv.hi)}] seconds, "
            f"{_wrap_desc(node.child)}"
        )
    if isinstance(node, Until):
        iv = node.interval
        return (
            f"{_wrap_desc(node.left)} holds from now until, at some time in "
            f"[{format_number(iv.lo)}, {format_number(iv.hi)}] seconds, {_wrap_desc(node.right)}"
        )
    if isinstance(node, And):
        return f"{_wrap_desc(node.left)} and {_wrap_desc(node.right)}"
    if isinstance(node, Or):
        return f"{_wrap_desc(node.left)} or {_wrap_desc(node.right)}"
    if isinstance(node, Implies):
        return f"if {_wrap_desc(node.left)}, then {_wrap_desc(node.right)}"
    raise TypeError(f"not a formula node: {node!r}")


def _wrap_desc(node: Formula) -> str:
    text = _describe(node)
    return f"({text})" if _needs_brackets(node) else text


def back_translate(formula: Formula, backend=None) -> str:
    """Fixed-scheme natural language reading of a formula.

    Template mode (no backend) is deterministic and injective on canonical
    formulas. With a backend, the same scheme is stated in the prompt and
    the model's wording is used instead.
    """
    scheme = _describe(formula)
    if backend is None:
        return scheme
    user = (
        "Express the formula in one plain English sentence. Follow this "
        "fixed scheme for variables and symbols, adjusting only "
        f"readability: {scheme}\nFormula: {render(formula)}\nSentence:"
    )
    reply = backend.complete(request(BACK_TRANSLATE_TAG, None, user)).strip()
    if not reply:
        raise ClarificationError("back-translation returned an empty reply")
    return reply


# --- discrepancy analysis -----------------------------------------------------

_DISCREPANCY_INSTRUCTION = (
    "You compare candidate readings of one requirement. Identify every "
    "aspect on which the readings genuinely diverge (time windows, "
    "thresholds, referenced signals, logical structure). Reply with a "
    'single JSON object {"divergence_points": [{"aspect": str, '
    '"interpretations": [str, ...]}]} and nothing else; use an empty '
    "list when the readings agree."
)


def analyze_discrepancies(
    requirement: Requirement, descriptions: list[str], backend
) -> DiscrepancyReport:
    """Divergence points among candidate descriptions.

    Identical descriptions short-circuit to an empty report without any
    backend call; an empty report means no ambiguity could be localized.
    """
    if not descriptions:
        raise ClarificationError("discrepancy analysis needs at least one description")
    if len(set(descriptions)) == 1:
        return DiscrepancyReport()
    numbered = "\n".join(f"Reading {i + 1}: {d}" for i, d in enumerate(descriptions))
    user = f"Requirement: {requirement.text}\n{numbered}\nReport:"
    reply = backend.complete(request(DISCREPANCY_TAG, _DISCREPANCY_INSTRUCTION, user))
    try:
        obj = json.loads(reply[reply.index("{") : reply.rindex("}") + 1])
        points = tuple(
            DivergencePoint(str(p["aspect"]), tuple(str(i) for i in p["interpretations"]))
            for p in obj.get("divergence_points", ())
        )
    except (ValueError, KeyError, TypeError) as exc:
        raise ClarificationError(f"unparseable discrepancy report: {exc}") from exc
    return DiscrepancyReport(points)


# --- ambiguity inquirer ---------------------------------------------------------

_AMBIGUITY_QUERY_INSTRUCTION = (
    "You help a requirements engineer resolve an ambiguous requirement. "
    "Write one precise clarification question that asks the user to pick "
    "between the diverging readings. Restrict the question to the "
    "divergence points in the report; do not introduce information "
    "unrelated to the detected ambiguous segments. If the requirement is "
    f"actually unambiguous, reply exactly {NO_AMBIGUITY_MARKER}. Reply "
    "with the question only."
)


def generate_ambiguity_query(
    requirement: Requirement, report: DiscrepancyReport, backend
) -> ClarificationQuery | None:
    """Ask one question grounded in the discrepancy report's divergence
    points; None when the backend invokes the escape clause."""
    if report.empty:
        raise ClarificationError("cannot generate a query from an empty report")
    lines = []
    for point in report.divergence_points:
        readings = "; ".join(point.interpretations)
        lines.append(f"Aspect: {point.aspect}\nReadings: {readings}")
    user = (
        f"Requirement: {requirement.text}\n"
        f"Divergence report:\n" + "\n".join(lines) + "\nClarification question:"
    )
    reply = backend.complete(
        request(AMBIGUITY_QUERY_TAG, _AMBIGUITY_QUERY_INSTRUCTION, user)
    ).strip()
    if not reply:
        raise ClarificationError("ambiguity inquirer returned an empty reply")
    if reply == NO_AMBIGUITY_MARKER:
        return None
    return ClarificationQuery(
        "Ambiguity", reply, target=report.divergence_points[0].aspect
    )


# --- refinement -----------------------------------------------------------------

_REFINE_INSTRUCTION = (
    "You merge a clarification answer into a requirement. Rules: preserve "
    "the original content; modify only the fragment the user clarified; "
    "introduce no constraints the user did not confirm. If the answer "
    f"does not address the question, reply exactly {UNUSABLE_MARKER}. "
    "Reply with the full revised requirement only."
)


def refine_requirement(
    requirement: Requirement, query: ClarificationQuery, answer: str, backend
) -> Requirement:
    """Fold one answered query into the requirement text."""
    if not answer.strip():
        raise ClarificationError("answer must be non-empty")
    user = (
        f"Requirement: {requirement.text}\n"
        f"Question: {query.text}\n"
        f"Answer: {answer}\n"
        "Revised requirement:"
    )
    reply = backend.complete(request(REFINE_TAG, _REFINE_INSTRUCTION, user)).strip()
    if not reply:
        raise ClarificationError("refinement returned an empty reply")
    if reply == UNUSABLE_MARKER:
        raise UnusableAnswerError(f"answer does not address the query: {answer!r}")
    return requirement.refined(query.text, answer, reply)


# --- final transformation --------------------------------------------------------


def transform_to_stl(requirement: Requirement, backend) -> Formula:
    """NL-to-STL transformation at temperature 0, syntax-gated, one retry."""
    user = _transform_user_prompt(requirement.text)
    last_reply = ""
    for _ in range(2):
        last_reply = backend.complete(
            request(TRANSFORM_TAG, _TRANSFORM_INSTRUCTION, user, temperature=0.0)
        ).strip()
        if not check_syntax(last_reply):
            return parse(last_reply)
    raise ClarificationError(f"transformation output failed the syntax check: {last_reply!r}")


# --- session state machine --------------------------------------------------------


class ClarificationSession:
    """Vagueness loop, then ambiguity loop, then transformation.

    Detectors are callables text -> DetectionResult. `start()` advances
    until a query is pending or the session finishes; `submit_answer()`
    resumes. Any sub-operation error aborts the session, keeping the
    partial transcript.
    """

    def __init__(
        self,
        requirement: Requirement | str,
        vagueness_detector,
        ambiguity_detector,
        backend,
        config: SessionConfig | None = None,
        backtranslate_backend=None,
        session_id: str = "session",
    ):
        if isinstance(requirement, str):
            requirement = Requirement(session_id, requirement)
        self.requirement = requirement
        self.vagueness_detector = vagueness_detector
        self.ambiguity_detector = ambiguity_detector
        self.backend = backend
        self.backtranslate_backend = backtranslate_backend
        self.state = SessionState(config=config or SessionConfig())
        self.pending_query: ClarificationQuery | None = None
        self.final_formula: Formula | None = None
        self.transcript: list[TranscriptEvent] = []
        self.error: str | None = None
        self._reask_attempted = False
        self._started = False

    # transcript helpers

    def _log(self, kind: str, **payload) -> None:
        self.transcript.append(
            TranscriptEvent(len(self.transcript), self.state.phase.value, kind, payload)
        )

    def _logged_backend(self):
        session = self

        class _Recorder:
            def complete(self, req: CompletionRequest) -> str:
                session._log(
                    "prompt",
                    tag=req.operation_tag,
                    messages=[{"role": r, "content": c} for r, c in req.messages],
                )
                reply = session.backend.complete(req)
                session._log("reply", tag=req.operation_tag, text=reply)
                return reply

        return _Recorder()

    # public surface

    def start(self) -> None:
        if self._started:
            raise ClarificationError("session already started")
        self._started = True
        self._advance()

    def submit_answer(self, answer: str) -> None:
        if self.pending_query is None:
            raise ClarificationError("no pending query to answer")
        if not answer.strip():
            raise ClarificationError("answer must be non-empty")
        query = self.pending_query
        self._log("answer", query=query.text, text=answer)
        try:
            self.requirement = refine_requirement(
                self.requirement, query, answer, self._logged_backend()
            )
        except UnusableAnswerError as exc:
            if self._reask_attempted:
                self._abort(str(exc))
                return
            self._reask_attempted = True
            self._log("reask", query=query.text, reason=str(exc))
            return  # same query stays pending; caller asks again
        except Exception as exc:  # noqa: BLE001 - abort records the cause
            self._abort(str(exc))
            return
        self._reask_attempted = False
        self.pending_query = None
        self._log("refine", text=self.requirement.text)
        self._advance()

    @property
    def done(self) -> bool:
        return self.state.phase in (Phase.DONE, Phase.ABORTED)

    # internals

    def _abort(self, message: str) -> None:
        self.error = message
        self._log("error", message=message)
        self.state.phase = Phase.ABORTED
        self.pending_query = None

    def _advance(self) -> None:
        try:
            while True:
                if self.state.phase is Phase.VAGUENESS:
                    if self._vagueness_step():
                        return
                elif self.state.phase is Phase.AMBIGUITY:
                    if self._ambiguity_step():
                        return
                elif self.state.phase is Phase.TRANSFORMING:
                    self._transform_step()
                    return
                else:
                    return
        except Exception as exc:  # noqa: BLE001 - abort records the cause
            self._abort(str(exc))

    def _vagueness_step(self) -> bool:
        """One detect/ask round; True when a query is pending."""
        result: DetectionResult = self.vagueness_detector(self.requirement.text)
        self._log(
            "detect",
            detector="vagueness",
            defective=result.is_defective,
            types=sorted(result.types),
        )
        if not result.is_defective:
            self.state.phase = Phase.AMBIGUITY
            self._log("phase", value=Phase.AMBIGUITY.value)
            return False
        if self.state.vagueness_iterations >= self.state.config.max_iterations_per_phase:
            self._abort("vagueness loop exceeded the iteration cap")
            return True
        self.state.vagueness_iterations += 1
        vtype = min(result.types) if result.types else "Temporal"
        query = generate_vagueness_query(self.requirement, vtype, self._logged_backend())
        if query is None:
            # escape clause: pass the requirement through unchanged
            self._log("escape", stage="Vagueness")
            self.state.phase = Phase.AMBIGUITY
            self._log("phase", value=Phase.AMBIGUITY.value)
            return False
        self.pending_query = query
        self._log("query", stage=query.stage, text=query.text, target=query.target)
        return True

    def _ambiguity_step(self) -> bool:
        result: DetectionResult = self.ambiguity_detector(self.requirement.text)
        self._log(
            "detect",
            detector="ambiguity",
            defective=result.is_defective,
            types=sorted(result.types),
        )
        if not result.is_defective:
            self.state.phase = Phase.TRANSFORMING
            self._log("phase", value=Phase.TRANSFORMING.value)
            return False
        if self.state.ambiguity_iterations >= self.state.config.max_iterations_per_phase:
            self._abort("ambiguity loop exceeded the iteration cap")
            return True
        self.state.ambiguity_iterations += 1
        candidates = sample_candidates(
            self.requirement,
            self.state.config.candidate_n,
            self._logged_backend(),
            temperature=self.state.config.sampling_temperature,
            resample_budget_factor=self.state.config.resample_budget_factor,
        )
        self._log("candidates", formulas=[render(f) for f in candidates.formulas])
        descriptions = [
            back_translate(f, self.backtranslate_backend) for f in candidates.formulas
        ]
        self._log("descriptions", texts=descriptions)
        report = analyze_discrepancies(
            self.requirement, descriptions, self._logged_backend()
        )
        self._log(
            "report",
            divergence_points=[
                {"aspect": p.aspect, "interpretations": list(p.interpretations)}
                for p in report.divergence_points
            ],
        )
        if report.empty:
            # no concrete ambiguous segment localized: pass through
            self._log("no_ambiguity_localized")
            self.state.phase = Phase.TRANSFORMING
            self._log("phase", value=Phase.TRANSFORMING.value)
            return False
        query = generate_ambiguity_query(self.requirement, report, self._logged_backend())
        if query is None:
            self._log("escape", stage="Ambiguity")
            self.state.phase = Phase.TRANSFORMING
            self._log("phase", value=Phase.TRANSFORMING.value)
            return False
        self.pending_query = query
        self._log("query", stage=query.stage, text=query.text, target=query.target)
        return True

    def _transform_step(self) -> None:
        formula = transform_to_stl(self.requirement, self._logged_backend())
        self.final_formula = formula
        self._log("transform", formula=render(formula))
        self.state.phase = Phase.DONE
        self._log("phase", value=Phase.DONE.value)


@dataclass(slots=True)
class SessionResult:
    requirement: Requirement
    formula: Formula | None
    state: SessionState
    transcript: list[TranscriptEvent]
    error: str | None = None


def run_session(
    initial: Requirement | str,
    vagueness_detector,
    ambiguity_detector,
    backend,
    answer_source,
    config: SessionConfig | None = None,
    backtranslate_backend=None,
) -> SessionResult:
    """Drive a full session, pulling one answer per emitted query.

    `answer_source` is any callable query -> str (terminal prompt, API
    client, or a scripted list's pop).
    """
    session = ClarificationSession(
        initial,
        vagueness_detector,
        ambiguity_detector,
        backend,
        config=config,
        backtranslate_backend=backtranslate_backend,
    )
    session.start()
    while not session.done and session.pending_query is not None:
        answer = answer_source(session.pending_query)
        session.submit_answer(answer)
    return SessionResult(
        session.requirement,
        session.final_formula,
        session.state,
        session.transcript,
        session.error,
    )


def scripted_answers(answers: list[str]):
    """Answer source that replays a fixed list, failing on exhaustion."""
    queue = list(answers)

    def _next(query: ClarificationQuery) -> str:
        if not queue:
            raise ClarificationError(f"no scripted answer left for query: {query.text!r}")
        return queue.pop(0)

    return _next


def scripted_detector(results: list[DetectionResult]):
    """Detector that replays fixed results, repeating the last one."""
    queue = list(results)

    def _detect(text: str) -> DetectionResult:
        if len(queue) > 1:
            return queue.pop(0)
        return queue[0]

    return _detect
