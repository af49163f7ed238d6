"""Defect-corpus construction.

Clean NL-STL pairs are mutated into vague or ambiguous variants by
type-directed operators; alignment between the sentence and the formula is
lexical (numbers and connective keywords located in the text). A rule-based
syntactic validator gates every emitted mutant. Rule-only builds are fully
deterministic under a seed; semantic-ambiguity mutation needs a completion
backend.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field, replace

from .gateway import CompletionRequest
from .stl.ast import Formula, intervals, thresholds, variables
from .stl.parser import parse

VAGUENESS_TYPES = ("Temporal", "Numerical", "ConditionalLogic")
AMBIGUITY_TYPES = ("Referential", "Semantic")
DEFECT_TYPES = VAGUENESS_TYPES + AMBIGUITY_TYPES

LABELS = ("clean", "vague", "ambiguous")


class DatasetError(ValueError):
    pass


class NotApplicableError(DatasetError):
    """The record offers no alignable span for the requested mutation."""


class MutationRejectedError(DatasetError):
    """The mutated sentence failed the syntactic validator."""


@dataclass(frozen=True, slots=True)
class DatasetRecord:
    id: str
    nl: str
    stl: str = ""
    label: str = "clean"
    defect_types: frozenset[str] = frozenset()
    reference_query: str | None = None
    parent_id: str | None = None
    extras: tuple[tuple[str, object], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "defect_types", frozenset(self.defect_types))
        if self.label not in LABELS:
            raise DatasetError(f"unknown label: {self.label!r}")
        unknown = self.defect_types - set(DEFECT_TYPES)
        if unknown:
            raise DatasetError(f"unknown defect types: {sorted(unknown)}")
        if self.label == "clean" and self.defect_types:
            raise DatasetError("clean records carry no defect types")
        if self.label == "vague":
            if not self.defect_types or not self.defect_types <= set(VAGUENESS_TYPES):
                raise DatasetError("vague records need vagueness defect types")
        if self.label == "ambiguous":
            if not self.defect_types or not self.defect_types <= set(AMBIGUITY_TYPES):
                raise DatasetError("ambiguous records need ambiguity defect types")
        if self.label != "clean" and not self.parent_id:
            raise DatasetError("mutated records must link to a parent")


@dataclass(frozen=True)
class PhraseLexicon:
    """Expression sets used by the mutation operators and the rule detector."""

    v_temporal: frozenset[str]
    v_numerical: frozenset[str]
    v_conditional: frozenset[str]
    v_referential: frozenset[str]

    def __post_init__(self) -> None:
        for name in ("v_temporal", "v_numerical", "v_conditional", "v_referential"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
            if not getattr(self, name):
                raise DatasetError(f"lexicon set {name} must be non-empty")
        sets = [self.v_temporal, self.v_numerical, self.v_conditional, self.v_referential]
        union = set().union(*sets)
        if len(union) != sum(len(s) for s in sets):
            raise DatasetError("lexicon sets must be pairwise disjoint")

    def for_type(self, defect_type: str) -> frozenset[str]:
        return {
            "Temporal": self.v_temporal,
            "Numerical": self.v_numerical,
            "ConditionalLogic": self.v_conditional,
            "Referential": self.v_referential,
        }[defect_type]


def default_lexicon() -> PhraseLexicon:
    return PhraseLexicon(
        v_temporal=frozenset(
            {
                "soon",
                "later",
                "in a moment",
                "within the next period of time",
                "shortly",
                "after a while",
                "at some point",
            }
        ),
        v_numerical=frozenset(
            {
                "is high",
                "is low",
                "is large",
                "is small",
                "becomes significant",
                "stays moderate",
                "reaches a considerable level",
            }
        ),
        v_conditional=frozenset(
            {
                "in some cases",
                "under certain conditions",
                "depending on the situation",
                "at times",
            }
        ),
        v_referential=frozenset(
            {
                "it",
                "that signal",
                "the other signal",
                "the same signal",
                "this value",
            }
        ),
    )


@dataclass(frozen=True, slots=True)
class MutationPlan:
    temporal: int = 0
    numerical: int = 0
    conditional: int = 0
    referential: int = 0
    semantic: int = 0
    seed: int = 0
    mode: str = "rule-only"  # or "llm-assisted"

    def __post_init__(self) -> None:
        for name in ("temporal", "numerical", "conditional", "referential", "semantic"):
            if getattr(self, name) < 0:
                raise DatasetError("mutation counts must be non-negative")
        if self.mode not in ("rule-only", "llm-assisted"):
            raise DatasetError(f"unknown mode: {self.mode!r}")

    def count_for(self, defect_type: str) -> int:
        return {
            "Temporal": self.temporal,
            "Numerical": self.numerical,
            "ConditionalLogic": self.conditional,
            "Referential": self.referential,
            "Semantic": self.semantic,
        }[defect_type]


# --- syntactic validator ----------------------------------------------------

FINITE_VERBS = {
    "is", "are", "be", "was", "were", "will", "shall", "should", "must",
    "stays", "stay", "remains", "remain", "exceeds", "exceed", "exceeded",
    "decreases", "decrease", "decreased", "increases", "increase",
    "increased", "activates", "activate", "activated", "holds", "hold",
    "reaches", "reach", "reached", "responds", "respond", "becomes",
    "become", "drops", "drop", "dropped", "rises", "rise", "rose", "keeps",
    "keep", "falls", "fall", "starts", "start", "stops", "stop", "opens",
    "open", "closes", "close", "triggers", "trigger", "sounds", "sound",
    "turns", "turn", "runs", "run", "fires", "fire",
}

COMPARATOR_PHRASES = (
    ">", "<", ">=", "<=",
    "greater than", "less than", "at least", "at most", "above", "below",
    "exceeds", "under", "over",
)

DANGLING_WORDS = {"and", "or", "if", "then"}

_WORD_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_/]*|\d+(?:\.\d+)?|[^\sA-Za-z0-9_]")
NUMBER_RE = re.compile(r"\d+(?:\.\d+)?")

_BRACKET_PAIRS = {"(": ")", "[": "]", "{": "}"}


@dataclass(frozen=True, slots=True)
class ValidationResult:
    ok: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _words(text: str) -> list[str]:
    return [w.lower() for w in _WORD_RE.findall(text)]


def validate_nl(text: str) -> ValidationResult:
    """Rule-based syntactic check for mutated sentences."""
    reasons: list[str] = []
    stripped = text.strip()
    if not stripped:
        return ValidationResult(False, ("empty text",))
    first = stripped[0]
    if not (first.isalnum() or first in "[({"):
        reasons.append("must start with a letter, digit, or bracket")
    lowered = stripped.lower()
    has_verb = any(w in FINITE_VERBS for w in _words(stripped))
    has_cmp = any(p in lowered for p in COMPARATOR_PHRASES)
    if not (has_verb or has_cmp):
        reasons.append("needs a finite verb or comparator phrase")
    stack: list[str] = []
    balanced = True
    for ch in stripped:
        if ch in _BRACKET_PAIRS:
            stack.append(_BRACKET_PAIRS[ch])
        elif ch in _BRACKET_PAIRS.values():
            if not stack or stack.pop() != ch:
                balanced = False
                break
    if not balanced or stack:
        reasons.append("unbalanced brackets")
    for quote in ('"', "'"):
        if stripped.count(quote) % 2:
            reasons.append("unbalanced quotes")
            break
    tail = stripped.rstrip(".!?").rstrip()
    if tail.endswith(","):
        reasons.append("ends with a dangling connective")
    else:
        last = tail.rsplit(maxsplit=1)[-1].lower() if tail else ""
        if last in DANGLING_WORDS:
            reasons.append("ends with a dangling connective")
    if "  " in stripped:
        reasons.append("doubled whitespace")
    return ValidationResult(not reasons, tuple(reasons))


# --- span location helpers --------------------------------------------------


@dataclass(frozen=True, slots=True)
class _Span:
    start: int
    end: int

    def text(self, source: str) -> str:
        return source[self.start : self.end]


def _number_values(word: str) -> list[float]:
    return [float(m) for m in NUMBER_RE.findall(word)]


def _word_spans(text: str) -> list[tuple[str, int, int]]:
    out = []
    for match in re.finditer(r"\S+", text):
        out.append((match.group(), match.start(), match.end()))
    return out


_TIME_UNITS = {"seconds", "second", "secs", "sec", "s", "minutes", "minute", "units", "unit"}
_TIME_LEAD = {"during", "within", "in", "for", "over", "after", "before", "between",
              "the", "next", "first", "following", "time", "and", "to", "from"}


def _strip_punct(word: str) -> str:
    return word.strip(".,;:!?")


def _punct_tail(word: str) -> int:
    return len(word) - len(word.rstrip(".,;:!?"))


def _expand_time_span(words: list[tuple[str, int, int]], idx: int) -> _Span:
    lo = idx
    hi = idx
    # swallow trailing range partners and unit words, stopping at punctuation
    while hi + 1 < len(words) and not _punct_tail(words[hi][0]):
        nxt = _strip_punct(words[hi + 1][0]).lower()
        if nxt in _TIME_UNITS or nxt == "time" or NUMBER_RE.search(nxt) or nxt in {"and", "to"}:
            hi += 1
            continue
        break
    # swallow leading prepositions and articles
    while lo - 1 >= 0 and not _punct_tail(words[lo - 1][0]):
        prev = _strip_punct(words[lo - 1][0]).lower()
        if prev in _TIME_LEAD or NUMBER_RE.search(prev):
            lo -= 1
            continue
        break
    return _Span(words[lo][1], words[hi][2] - _punct_tail(words[hi][0]))


def _replace_span(text: str, span: _Span, replacement: str) -> str:
    prefix = text[: span.start]
    suffix = text[span.end :]
    if not prefix.strip() and replacement:
        replacement = replacement[0].upper() + replacement[1:]
    merged = f"{prefix}{replacement}{suffix}"
    merged = re.sub(r"\s+,", ",", merged)
    merged = re.sub(r" {2,}", " ", merged)
    return merged.strip()


# --- vagueness mutations ----------------------------------------------------


def _mutate_temporal(nl: str, formula: Formula, lexicon: PhraseLexicon, rng: random.Random) -> str:
    bounds = {b for iv in intervals(formula) for b in (iv.lo, iv.hi)}
    if not bounds:
        raise NotApplicableError("formula has no temporal intervals")
    words = _word_spans(nl)
    hits = [
        i
        for i, (word, _, _) in enumerate(words)
        if any(v in bounds for v in _number_values(word))
    ]
    if not hits:
        raise NotApplicableError("no interval bound found in the sentence")
    idx = rng.choice(hits)
    span = _expand_time_span(words, idx)
    phrase = rng.choice(sorted(lexicon.v_temporal))
    return _replace_span(nl, span, phrase)


_CMP_CONTEXT = {
    "exceeds", "exceed", "exceeding", "above", "below", "under", "over",
    "reaches", "reach", "than", "least", "most", "at", "greater", "less",
    "equals", "equal", ">", "<", ">=", "<=",
    # stative verbs and modals directly in front of the comparator word,
    # so the whole predicate is rewritten as one piece
    "is", "are", "be", "stays", "stay", "remains", "remain", "keeps",
    "keep", "will", "shall", "should", "must", "drops", "drop", "falls",
    "fall", "rises", "rise", "goes", "go",
}


def _mutate_numerical(nl: str, formula: Formula, lexicon: PhraseLexicon, rng: random.Random) -> str:
    bounds = {b for iv in intervals(formula) for b in (iv.lo, iv.hi)}
    cutoffs = {c for cs in thresholds(formula).values() for c in cs}
    words = _word_spans(nl)
    candidates = []
    for i, (word, _, _) in enumerate(words):
        values = _number_values(word)
        if not values:
            continue
        if not any(v in cutoffs and v not in bounds for v in values):
            continue
        # need a comparator-style context immediately to the left
        lo = i
        while lo - 1 >= 0 and _strip_punct(words[lo - 1][0]).lower() in _CMP_CONTEXT:
            lo -= 1
        if lo < i:
            candidates.append((lo, i))
    if not candidates:
        raise NotApplicableError("no comparator-adjacent threshold found in the sentence")
    lo, hi = candidates[rng.randrange(len(candidates))]
    span = _Span(words[lo][1], words[hi][2] - _punct_tail(words[hi][0]))
    phrase = rng.choice(sorted(lexicon.v_numerical))
    return _replace_span(nl, span, phrase)


_IF_THEN = re.compile(r"\bif\b(?P<cond>.+?),?\s+\bthen\b", re.IGNORECASE | re.DOTALL)
_WHEN_LEAD = re.compile(r"\b(whenever|when)\b\s+", re.IGNORECASE)
_COORD = re.compile(r"\s+\b(and|or|implies)\b\s+", re.IGNORECASE)


def _mutate_conditional(nl: str, formula: Formula, lexicon: PhraseLexicon, rng: random.Random) -> str:
    from .stl.ast import And, Implies, Or, walk

    if not any(isinstance(n, (And, Or, Implies)) for n in walk(formula)):
        raise NotApplicableError("formula has no logical connective")

    options = []
    if _IF_THEN.search(nl):
        options.append("ifthen")
    if _WHEN_LEAD.search(nl):
        options.append("when")
    if _COORD.search(nl):
        options.append("coord")
    if not options:
        raise NotApplicableError("no connective pattern found in the sentence")
    choice = options[rng.randrange(len(options))]
    use_phrase = rng.random() < 0.5
    lead = ""
    if use_phrase:
        lead = rng.choice(sorted(lexicon.v_conditional)) + " "

    if choice == "ifthen":
        def repl(match: re.Match) -> str:
            return f"{lead}{match.group('cond').strip()},"
        mutated = _IF_THEN.sub(repl, nl, count=1)
    elif choice == "when":
        match = _WHEN_LEAD.search(nl)
        if match.start() == 0:
            mutated = nl[: match.start()] + lead + nl[match.end() :]
        else:
            # mid-sentence connective: join the clauses with a comma
            mutated = nl[: match.start()].rstrip().rstrip(",") + ", " + lead + nl[match.end() :]
    else:
        mutated = _COORD.sub(", ", nl, count=1)
        if lead:
            mutated = f"{lead}{mutated[0].lower()}{mutated[1:]}"
    mutated = re.sub(r" {2,}", " ", mutated).strip()
    if mutated and mutated[0].islower():
        mutated = mutated[0].upper() + mutated[1:]
    return mutated


_VAGUENESS_OPS = {
    "Temporal": _mutate_temporal,
    "Numerical": _mutate_numerical,
    "ConditionalLogic": _mutate_conditional,
}


def _mutant_id(parent: DatasetRecord, vtype: str) -> str:
    return f"{parent.id}:{vtype.lower()}"


def mutate_vagueness(
    record: DatasetRecord,
    vtype: str,
    lexicon: PhraseLexicon,
    seed: int = 0,
) -> DatasetRecord:
    """Plant one vagueness type into a clean (or already-vague) record.

    Raises NotApplicableError when the sentence has no alignable span for
    the type, and MutationRejectedError when the rewrite fails validation.
    Applying a second type to a vague record merges the defect types.
    """
    if vtype not in VAGUENESS_TYPES:
        raise DatasetError(f"not a vagueness type: {vtype!r}")
    if record.label not in ("clean", "vague"):
        raise DatasetError("vagueness mutation expects a clean or vague record")
    if not record.stl:
        raise NotApplicableError("record carries no formula to align against")
    formula = parse(record.stl)
    rng = random.Random((seed, record.id, vtype).__str__())
    mutated = _VAGUENESS_OPS[vtype](record.nl, formula, lexicon, rng)
    verdict = validate_nl(mutated)
    if not verdict:
        raise MutationRejectedError("; ".join(verdict.reasons))
    return DatasetRecord(
        id=_mutant_id(record, vtype),
        nl=mutated,
        stl=record.stl,
        label="vague",
        defect_types=record.defect_types | {vtype},
        reference_query=record.reference_query,
        parent_id=record.id,
    )


# --- ambiguity mutations ----------------------------------------------------

SEMANTIC_MUTATION_TAG = "semantic_mutation"

_SEMANTIC_DEMOS = (
    (
        "x2 should stay below 0.5 within 30 seconds after x1 exceeds 0.2",
        "within the next 30 seconds, if x1 exceeds 0.2, then x2 should stay below 0.5",
        "the phrase 'the next 30 seconds' can start when x1 exceeds 0.2 or at the current moment",
    ),
    (
        "the alarm sounds within 5 seconds whenever the pressure rises above 80",
        "whenever the pressure rises above 80 the alarm sounds in the 5 seconds that follow",
        "'the 5 seconds that follow' can follow the rise or follow the start of monitoring",
    ),
)


def mutate_ambiguity(
    record: DatasetRecord,
    atype: str,
    lexicon: PhraseLexicon,
    backend=None,
    seed: int = 0,
) -> DatasetRecord:
    """Plant referential or semantic ambiguity into a clean record.

    Referential rewriting is rule-based and needs a formula with at least
    two distinct signals plus a repeated mention in the sentence; semantic
    rewriting requires a completion backend carrying demonstration triples.
    """
    if atype not in AMBIGUITY_TYPES:
        raise DatasetError(f"not an ambiguity type: {atype!r}")
    if record.label != "clean":
        raise DatasetError("ambiguity mutation expects a clean record")
    if not record.stl:
        raise NotApplicableError("record carries no formula to align against")
    formula = parse(record.stl)
    rng = random.Random((seed, record.id, atype).__str__())

    if atype == "Referential":
        names = variables(formula)
        if len(names) < 2:
            raise NotApplicableError("referential ambiguity needs at least two distinct signals")
        words = _word_spans(record.nl)
        mentions: dict[str, list[int]] = {}
        for i, (word, _, _) in enumerate(words):
            bare = _strip_punct(word)
            if bare in names:
                mentions.setdefault(bare, []).append(i)
        repeated = sorted(name for name, idxs in mentions.items() if len(idxs) >= 2)
        if not repeated:
            raise NotApplicableError("no repeated signal mention to pronominalize")
        name = repeated[rng.randrange(len(repeated))]
        occurrence = rng.choice(mentions[name][1:])
        word, start, end = words[occurrence]
        bare = _strip_punct(word)
        offset = word.index(bare)
        span = _Span(start + offset, start + offset + len(bare))
        phrase = rng.choice(sorted(lexicon.v_referential))
        mutated = _replace_span(record.nl, span, phrase)
    else:
        if backend is None:
            raise DatasetError("semantic ambiguity mutation requires a completion backend")
        demos = "\n\n".join(
            f"Original: {orig}\nAmbiguous rewrite: {rewrite}\nWhy it is ambiguous: {why}"
            for orig, rewrite, why in _SEMANTIC_DEMOS
        )
        prompt = (
            "Rewrite the requirement so that the same signals and predicates "
            "remain, but the sentence admits more than one plausible formal "
            "interpretation. Keep grammatical correctness and semantic "
            "coherence. Reply with the rewritten requirement only.\n\n"
            f"{demos}\n\nOriginal: {record.nl}\nAmbiguous rewrite:"
        )
        mutated = backend.complete(
            CompletionRequest(SEMANTIC_MUTATION_TAG, (("user", prompt),))
        ).strip()
        for name in variables(formula):
            if not re.search(rf"\b{re.escape(name)}\b", mutated):
                raise MutationRejectedError(f"rewrite dropped signal {name!r}")

    verdict = validate_nl(mutated)
    if not verdict:
        raise MutationRejectedError("; ".join(verdict.reasons))
    return DatasetRecord(
        id=_mutant_id(record, atype),
        nl=mutated,
        stl=record.stl,
        label="ambiguous",
        defect_types=frozenset({atype}),
        reference_query=record.reference_query,
        parent_id=record.id,
    )


# --- corpus build -----------------------------------------------------------


@dataclass(slots=True)
class TypeReport:
    applied: int = 0
    skipped: int = 0
    rejected: int = 0


@dataclass(slots=True)
class BuildReport:
    per_type: dict[str, TypeReport] = field(default_factory=dict)
    partial: list[str] = field(default_factory=list)

    def type_report(self, defect_type: str) -> TypeReport:
        return self.per_type.setdefault(defect_type, TypeReport())


def build_dataset(
    corpus: list[DatasetRecord],
    plan: MutationPlan,
    lexicon: PhraseLexicon | None = None,
    backend=None,
) -> tuple[list[DatasetRecord], BuildReport]:
    """Emit the originals plus planned mutants, with a per-type build report.

    Rule-only builds never touch the backend: semantic mutations are
    recorded as skipped. When a type runs out of applicable records the
    shortfall is flagged in the report instead of failing the build.
    """
    lexicon = lexicon or default_lexicon()
    for record in corpus:
        if record.label != "clean":
            raise DatasetError(f"corpus record {record.id!r} is not clean")
        if record.stl:
            parse(record.stl)
    ordered = sorted(corpus, key=lambda r: r.id)
    report = BuildReport()
    out = list(corpus)

    for defect_type in DEFECT_TYPES:
        wanted = plan.count_for(defect_type)
        if wanted == 0:
            continue
        stats = report.type_report(defect_type)
        if defect_type == "Semantic" and plan.mode == "rule-only":
            stats.skipped += wanted
            report.partial.append(f"Semantic skipped in rule-only mode ({wanted} requested)")
            continue
        rng = random.Random((plan.seed, defect_type).__str__())
        candidates = list(ordered)
        rng.shuffle(candidates)
        for record in candidates:
            if stats.applied >= wanted:
                break
            try:
                if defect_type in VAGUENESS_TYPES:
                    mutant = mutate_vagueness(record, defect_type, lexicon, plan.seed)
                else:
                    mutant = mutate_ambiguity(record, defect_type, lexicon, backend, plan.seed)
            except NotApplicableError:
                stats.skipped += 1
                continue
            except MutationRejectedError:
                stats.rejected += 1
                continue
            out.append(mutant)
            stats.applied += 1
        if stats.applied < wanted:
            report.partial.append(
                f"{defect_type}: {stats.applied}/{wanted} mutants "
                f"(ran out of applicable records)"
            )
    return out, report


# --- dataset file I/O -------------------------------------------------------

_RECORD_FIELDS = ("id", "nl", "stl", "label", "defect_types", "reference_query", "parent_id")


def record_to_object(record: DatasetRecord) -> dict:
    obj = {
        "id": record.id,
        "nl": record.nl,
        "stl": record.stl,
        "label": record.label,
        "defect_types": sorted(record.defect_types),
        "reference_query": record.reference_query,
        "parent_id": record.parent_id,
    }
    obj.update(dict(record.extras))
    return obj


def record_from_object(obj: dict) -> DatasetRecord:
    extras = tuple(sorted((k, v) for k, v in obj.items() if k not in _RECORD_FIELDS))
    return DatasetRecord(
        id=obj["id"],
        nl=obj["nl"],
        stl=obj.get("stl") or "",
        label=obj.get("label", "clean"),
        defect_types=frozenset(obj.get("defect_types") or ()),
        reference_query=obj.get("reference_query"),
        parent_id=obj.get("parent_id"),
        extras=extras,
    )


def write_records(path: str, records: list[DatasetRecord]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record_to_object(record), ensure_ascii=False) + "\n")


def read_records(path: str) -> list[DatasetRecord]:
    out = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                out.append(record_from_object(json.loads(line)))
    return out


# --- lexicon file I/O -------------------------------------------------------

_SECTION_NAMES = {
    "temporal": "v_temporal",
    "numerical": "v_numerical",
    "conditional": "v_conditional",
    "referential": "v_referential",
}


def load_lexicon(path: str) -> PhraseLexicon:
    """Plain-text lexicon: `[section]` headers, one phrase per line."""
    sets: dict[str, set[str]] = {name: set() for name in _SECTION_NAMES.values()}
    current: str | None = None
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                section = line[1:-1].strip().lower()
                if section not in _SECTION_NAMES:
                    raise DatasetError(f"{path}:{lineno}: unknown section {section!r}")
                current = _SECTION_NAMES[section]
                continue
            if current is None:
                raise DatasetError(f"{path}:{lineno}: phrase outside any [section]")
            sets[current].add(line)
    return PhraseLexicon(**{k: frozenset(v) for k, v in sets.items()})


def save_lexicon(path: str, lexicon: PhraseLexicon) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for section, attr in _SECTION_NAMES.items():
            handle.write(f"[{section}]\n")
            for phrase in sorted(getattr(lexicon, attr)):
                handle.write(phrase + "\n")
            handle.write("\n")
