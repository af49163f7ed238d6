"""Vagueness and ambiguity detection.

Three detector families: a deterministic rule/lexicon baseline, a
prompt-based detector over any completion backend, and a trainable
ambiguity classifier (frozen embedding provider, two-layer projector with
L2-normalized output, linear head) optimized with a triplet loss plus
cross-entropy.
"""

from __future__ import annotations

import json
import re
import struct
from dataclasses import dataclass, field

import numpy as np
import torch
from torch import nn

from .dataset import (
    AMBIGUITY_TYPES,
    FINITE_VERBS,
    NUMBER_RE,
    PhraseLexicon,
    VAGUENESS_TYPES,
    default_lexicon,
)
from .gateway import CompletionRequest


class DetectionError(RuntimeError):
    pass


@dataclass(frozen=True, slots=True)
class DetectionResult:
    is_defective: bool
    types: frozenset[str] = frozenset()
    confidence: float = 1.0
    rationale: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "types", frozenset(self.types))
        if not self.is_defective and self.types:
            raise DetectionError("non-defective result cannot carry defect types")
        if not 0.0 <= self.confidence <= 1.0:
            raise DetectionError("confidence must lie in [0, 1]")


# --- triplet loss and projector model ---------------------------------------


def triplet_loss(anchor, positive, negative, margin: float = 1.0) -> float:
    """max(||a - p|| - ||a - n|| + margin, 0) with Euclidean norms."""
    a = np.asarray(getattr(anchor, "values", anchor), dtype=np.float64)
    p = np.asarray(getattr(positive, "values", positive), dtype=np.float64)
    n = np.asarray(getattr(negative, "values", negative), dtype=np.float64)
    if not (a.shape == p.shape == n.shape):
        raise DetectionError("triplet members must share one dimension")
    if margin <= 0:
        raise DetectionError("margin must be positive")
    value = np.linalg.norm(a - p) - np.linalg.norm(a - n) + margin
    return float(max(value, 0.0))


class _ProjectorNet(nn.Module):
    def __init__(self, input_dim: int, hidden_dim: int, output_dim: int):
        super().__init__()
        self.first = nn.Linear(input_dim, hidden_dim)
        self.second = nn.Linear(hidden_dim, output_dim)
        self.head = nn.Linear(output_dim, 2)

    def project(self, x: torch.Tensor) -> torch.Tensor:
        hidden = torch.relu(self.first(x))
        out = self.second(hidden)
        return nn.functional.normalize(out, p=2, dim=-1)

    def forward(self, x: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        projected = self.project(x)
        return projected, self.head(projected)


def _default_dims(input_dim: int) -> tuple[int, int]:
    # 4096 -> 1024 -> 256 scaled proportionally to the provider dimension
    hidden = max(input_dim // 4, 2)
    output = max(input_dim // 16, 2)
    return hidden, output


@dataclass
class AmbiguityModel:
    """Projector + 2-class head over a frozen embedding provider."""

    input_dim: int
    hidden_dim: int
    output_dim: int
    margin: float = 1.0
    threshold: float = 0.5
    net: _ProjectorNet = field(repr=False, default=None)

    def __post_init__(self) -> None:
        if self.net is None:
            self.net = _ProjectorNet(self.input_dim, self.hidden_dim, self.output_dim)
        self.net.eval()

    def project(self, vector: np.ndarray) -> np.ndarray:
        with torch.no_grad():
            tensor = torch.as_tensor(vector, dtype=torch.float64).reshape(1, -1)
            return self.net.project(tensor.float()).numpy()[0]

    def probability_ambiguous(self, vector: np.ndarray) -> float:
        with torch.no_grad():
            tensor = torch.as_tensor(vector, dtype=torch.float64).reshape(1, -1)
            _, logits = self.net(tensor.float())
            probs = torch.softmax(logits, dim=-1)
            return float(probs[0, 1])

    def parameters_snapshot(self) -> list[np.ndarray]:
        return [p.detach().numpy().copy() for p in self.net.parameters()]


@dataclass(frozen=True, slots=True)
class TrainingConfig:
    epochs: int = 10
    batch: int = 16
    lr: float = 5e-5
    margin: float = 1.0
    dropout: float = 0.1
    seed: int = 0
    hidden_dim: int | None = None
    output_dim: int | None = None


@dataclass(slots=True)
class EpochStats:
    epoch: int
    mean_triplet_loss: float
    mean_cross_entropy: float


def train_ambiguity_model(
    records: list[tuple[str, int]],
    provider,
    config: TrainingConfig | None = None,
) -> tuple[AmbiguityModel, list[EpochStats]]:
    """Train the ambiguity classifier with triplet + cross-entropy loss.

    The provider is frozen: texts are embedded once up front. Positives are
    a second dropout-perturbed copy of the anchor's embedding; negatives
    are drawn uniformly from the opposite class. Deterministic per seed.
    """
    config = config or TrainingConfig()
    if not records:
        raise DetectionError("no training records")
    labels = [label for _, label in records]
    if set(labels) != {0, 1}:
        raise DetectionError("training needs both classes present")

    vectors = np.stack([v.values for v in provider.embed([text for text, _ in records])])
    input_dim = vectors.shape[1]
    hidden_dim, output_dim = _default_dims(input_dim)
    if config.hidden_dim:
        hidden_dim = config.hidden_dim
    if config.output_dim:
        output_dim = config.output_dim

    torch.manual_seed(config.seed)
    prev_threads = torch.get_num_threads()
    torch.set_num_threads(1)
    try:
        net = _ProjectorNet(input_dim, hidden_dim, output_dim)
        model = AmbiguityModel(input_dim, hidden_dim, output_dim, config.margin, net=net)
        if config.epochs == 0:
            return model, []

        generator = torch.Generator().manual_seed(config.seed)
        optimizer = torch.optim.Adam(net.parameters(), lr=config.lr)
        triplet = nn.TripletMarginLoss(margin=config.margin, p=2)
        cross_entropy = nn.CrossEntropyLoss()
        data = torch.as_tensor(vectors, dtype=torch.float32)
        targets = torch.as_tensor(labels, dtype=torch.long)
        by_class = {
            0: torch.nonzero(targets == 0).flatten(),
            1: torch.nonzero(targets == 1).flatten(),
        }
        keep = 1.0 - config.dropout

        log: list[EpochStats] = []
        net.train()
        for epoch in range(config.epochs):
            order = torch.randperm(len(records), generator=generator)
            triplet_total = 0.0
            ce_total = 0.0
            batches = 0
            for start in range(0, len(records), config.batch):
                idx = order[start : start + config.batch]
                base = data[idx]
                if config.dropout > 0:
                    mask_a = (torch.rand(base.shape, generator=generator) < keep).float() / keep
                    mask_p = (torch.rand(base.shape, generator=generator) < keep).float() / keep
                else:
                    mask_a = mask_p = torch.ones_like(base)
                anchors = base * mask_a
                positives = base * mask_p
                neg_idx = torch.stack(
                    [
                        by_class[1 - int(targets[i])][
                            torch.randint(
                                len(by_class[1 - int(targets[i])]),
                                (1,),
                                generator=generator,
                            )
                        ][0]
                        for i in idx
                    ]
                )
                negatives = data[neg_idx]

                proj_a, logits = net(anchors)
                proj_p, _ = net(positives)
                proj_n, _ = net(negatives)
                loss_triplet = triplet(proj_a, proj_p, proj_n)
                loss_ce = cross_entropy(logits, targets[idx])
                loss = loss_triplet + loss_ce
                optimizer.zero_grad()
                loss.backward()
                optimizer.step()
                triplet_total += float(loss_triplet.detach())
                ce_total += float(loss_ce.detach())
                batches += 1
            log.append(EpochStats(epoch, triplet_total / batches, ce_total / batches))
        net.eval()
        return model, log
    finally:
        torch.set_num_threads(prev_threads)


def classify_ambiguity(model: AmbiguityModel, text: str, provider) -> DetectionResult:
    """Embed, project, classify; ambiguous iff P(ambiguous) >= 0.5."""
    vector = provider.embed([text])[0].values
    if vector.shape[0] != model.input_dim:
        raise DetectionError(
            f"provider dimension {vector.shape[0]} != model input {model.input_dim}"
        )
    prob = model.probability_ambiguous(vector)
    defective = prob >= model.threshold
    return DetectionResult(
        is_defective=defective,
        types=frozenset({"Semantic"}) if defective else frozenset(),
        confidence=prob,
    )


# --- model persistence ------------------------------------------------------

MODEL_MAGIC = b"AMBM1"


def save_model(path: str, model: AmbiguityModel) -> None:
    """Single-file layout: magic `AMBM1`, three little-endian uint32 dims,
    one little-endian float64 margin, then the parameter matrices as
    little-endian float64 in order W1, b1, W2, b2, Wh, bh (row-major)."""
    with open(path, "wb") as handle:
        handle.write(MODEL_MAGIC)
        handle.write(struct.pack("<III", model.input_dim, model.hidden_dim, model.output_dim))
        handle.write(struct.pack("<d", model.margin))
        for layer in (model.net.first, model.net.second, model.net.head):
            for tensor in (layer.weight, layer.bias):
                array = tensor.detach().numpy().astype("<f8")
                handle.write(array.tobytes())


def load_model(path: str) -> AmbiguityModel:
    with open(path, "rb") as handle:
        magic = handle.read(5)
        if magic != MODEL_MAGIC:
            raise DetectionError(f"not an ambiguity model file (magic {magic!r})")
        input_dim, hidden_dim, output_dim = struct.unpack("<III", handle.read(12))
        (margin,) = struct.unpack("<d", handle.read(8))
        net = _ProjectorNet(input_dim, hidden_dim, output_dim)
        with torch.no_grad():
            for layer in (net.first, net.second, net.head):
                for tensor in (layer.weight, layer.bias):
                    count = tensor.numel()
                    raw = handle.read(count * 8)
                    if len(raw) != count * 8:
                        raise DetectionError("truncated model file")
                    array = np.frombuffer(raw, dtype="<f8").reshape(tensor.shape)
                    tensor.copy_(torch.as_tensor(array.astype(np.float32)))
        if handle.read(1):
            raise DetectionError("trailing bytes in model file")
    return AmbiguityModel(input_dim, hidden_dim, output_dim, margin, net=net)


# --- prompt-based detectors -------------------------------------------------

VAGUENESS_DETECT_TAG = "detect_vagueness"
AMBIGUITY_DETECT_TAG = "detect_ambiguity"

_VAGUENESS_INSTRUCTION = (
    "You judge whether a natural language requirement for a real-time "
    "system is complete enough to write a formal temporal specification. "
    "Decide whether the requirement is vague, and if so classify every "
    "applicable vagueness type among: Temporal (missing or imprecise time "
    "bounds), Numerical (missing numeric thresholds or values), "
    "ConditionalLogic (missing or underspecified logical relationships). "
    'Reply with a single JSON object {"defective": bool, "types": '
    '[...], "rationale": str} and nothing else.'
)

_AMBIGUITY_INSTRUCTION = (
    "You judge whether a natural language requirement admits two or more "
    "distinct plausible formal interpretations. Classify every applicable "
    "ambiguity type among: Referential (an unclear referring expression), "
    "Semantic (the sentence structure admits multiple readings). Reply "
    'with a single JSON object {"defective": bool, "types": [...], '
    '"rationale": str} and nothing else.'
)


def _parse_detector_reply(reply: str, allowed: tuple[str, ...]) -> DetectionResult:
    match = re.search(r"\{.*\}", reply, re.DOTALL)
    if not match:
        raise DetectionError(f"detector reply is not structured: {reply[:80]!r}")
    try:
        obj = json.loads(match.group())
    except json.JSONDecodeError as exc:
        raise DetectionError(f"detector reply is not valid JSON: {exc}") from exc
    defective = obj.get("defective", obj.get("vague", obj.get("ambiguous")))
    if not isinstance(defective, bool):
        raise DetectionError("detector reply lacks a boolean judgment")
    types = frozenset(obj.get("types") or ())
    if not types <= set(allowed):
        raise DetectionError(f"detector reply names unknown types: {sorted(types)}")
    if defective and not types:
        types = frozenset({allowed[0]})
    confidence = float(obj.get("confidence", 1.0))
    return DetectionResult(
        is_defective=defective,
        types=types if defective else frozenset(),
        confidence=confidence,
        rationale=obj.get("rationale"),
    )


def _prompt_detect(requirement: str, backend, tag: str, instruction: str,
                   allowed: tuple[str, ...]) -> DetectionResult:
    req = CompletionRequest(
        tag,
        (("system", instruction), ("user", f"Requirement: {requirement}")),
    )
    last_error: Exception | None = None
    for _ in range(2):  # one retry on malformed replies
        reply = backend.complete(req)
        try:
            return _parse_detector_reply(reply, allowed)
        except DetectionError as exc:
            last_error = exc
    raise DetectionError(f"unparseable detector reply after retry: {last_error}")


def detect_vagueness(requirement: str, backend) -> DetectionResult:
    """Prompt-based vagueness detector; multi-label output allowed."""
    return _prompt_detect(
        requirement, backend, VAGUENESS_DETECT_TAG, _VAGUENESS_INSTRUCTION, VAGUENESS_TYPES
    )


def detect_ambiguity_prompt(requirement: str, backend) -> DetectionResult:
    """Prompt-based ambiguity detector over the same reply contract."""
    return _prompt_detect(
        requirement, backend, AMBIGUITY_DETECT_TAG, _AMBIGUITY_INSTRUCTION, AMBIGUITY_TYPES
    )


# --- rule/lexicon baseline --------------------------------------------------

_TEMPORAL_KEYWORDS = {
    "seconds", "second", "secs", "sec", "minutes", "minute", "hours",
    "hour", "time", "duration", "interval",
}

_MAGNITUDE_WORDS = {
    "high", "low", "large", "small", "significant", "significantly",
    "considerable", "moderate", "fast", "slow", "quickly", "slowly", "big",
}

_CLAUSE_CONNECTIVES = {
    "if", "then", "when", "whenever", "while", "and", "or", "implies",
    "unless", "because", "so", "therefore",
}

_WORDS_ONLY_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\d+(?:\.\d+)?")


def _phrase_hit(text: str, phrases) -> bool:
    lowered = f" {text.lower()} "
    return any(f" {p} " in re.sub(r"[.,;:!?]", " ", lowered) for p in phrases)


def _clause_like(clause: str) -> bool:
    words = {w.lower() for w in _WORDS_ONLY_RE.findall(clause)}
    return bool(words & FINITE_VERBS) or any(
        p in clause.lower() for p in ("greater than", "less than", ">", "<", "exceeds")
    )


def rule_detect_vagueness(
    requirement: str, lexicon: PhraseLexicon | None = None
) -> DetectionResult:
    """Deterministic lexicon baseline for the three vagueness types.

    Temporal: a temporal vague phrase occurs, or a time keyword appears
    with no number within two words. Numerical: a numerical vague phrase
    occurs, or a magnitude word's clause has no number. ConditionalLogic:
    two verb-bearing clauses are comma-joined with no connective.
    """
    lexicon = lexicon or default_lexicon()
    types: set[str] = set()
    words = [w.lower() for w in _WORDS_ONLY_RE.findall(requirement)]

    if _phrase_hit(requirement, lexicon.v_temporal):
        types.add("Temporal")
    else:
        for i, word in enumerate(words):
            if word in _TEMPORAL_KEYWORDS:
                window = words[max(0, i - 2) : i + 3]
                if not any(NUMBER_RE.fullmatch(w) for w in window):
                    types.add("Temporal")
                    break

    if _phrase_hit(requirement, lexicon.v_numerical):
        types.add("Numerical")
    else:
        for clause in re.split(r"[,;]", requirement):
            clause_words = {w.lower() for w in _WORDS_ONLY_RE.findall(clause)}
            if clause_words & _MAGNITUDE_WORDS and not NUMBER_RE.search(clause):
                types.add("Numerical")
                break

    clauses = [c.strip() for c in requirement.split(",") if c.strip()]
    for left, right in zip(clauses, clauses[1:]):
        if not (_clause_like(left) and _clause_like(right)):
            continue
        # the connective must sit at the joint: a subordinator opening the
        # left clause, or a connective opening the right one
        left_words = [w.lower() for w in _WORDS_ONLY_RE.findall(left)]
        right_words = [w.lower() for w in _WORDS_ONLY_RE.findall(right)]
        joined = (
            (left_words and left_words[0] in _CLAUSE_CONNECTIVES)
            or (left_words and left_words[-1] in _CLAUSE_CONNECTIVES)
            or (right_words and right_words[0] in _CLAUSE_CONNECTIVES)
        )
        if not joined:
            types.add("ConditionalLogic")
            break

    if types:
        return DetectionResult(True, frozenset(types), 1.0, "lexicon rules matched")
    return DetectionResult(False, frozenset(), 1.0)


def rule_detect_ambiguity(
    requirement: str, lexicon: PhraseLexicon | None = None
) -> DetectionResult:
    """Referential-cue baseline: flags referring expressions from the lexicon."""
    lexicon = lexicon or default_lexicon()
    if _phrase_hit(requirement, lexicon.v_referential):
        return DetectionResult(True, frozenset({"Referential"}), 1.0, "referring expression found")
    return DetectionResult(False, frozenset(), 1.0)
