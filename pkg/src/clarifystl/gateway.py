"""Completion and embedding providers.

Remote mode speaks the OpenAI-compatible chat-completions wire protocol;
scripted mode replays canned fixture replies keyed by (operation tag,
round), making every LLM-driven path testable with zero network activity.
The hash embedding provider stands in for a frozen text encoder.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass, field

import numpy as np

DEFAULT_BASE_URL = "https://api.openai.com"
API_KEY_ENV = "CLARIFYSTL_API_KEY"
BASE_URL_ENV = "CLARIFYSTL_BASE_URL"
DEFAULT_MODEL = "gpt-4o"

MAX_RETRIES = 3
BACKOFF_SECONDS = (0.5, 1.0, 2.0)


class GatewayError(RuntimeError):
    pass


class FixtureMissError(GatewayError):
    """Scripted lookup found no reply for the requested tag/round."""


@dataclass(frozen=True, slots=True)
class CompletionRequest:
    operation_tag: str
    messages: tuple[tuple[str, str], ...]
    temperature: float = 0.0
    max_tokens: int = 300
    model_id: str = DEFAULT_MODEL

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "messages", tuple((str(r), str(c)) for r, c in self.messages)
        )
        if not self.messages:
            raise ValueError("completion request needs at least one message")
        for role, _ in self.messages:
            if role not in ("system", "user", "assistant"):
                raise ValueError(f"unknown message role: {role!r}")
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError("temperature must lie in [0, 2]")

    def wire_body(self) -> bytes:
        """Canonical request body: exactly model, messages, temperature,
        max_tokens, in that order; byte-stable for identical requests."""
        body = {
            "model": self.model_id,
            "messages": [
                {"role": role, "content": content} for role, content in self.messages
            ],
            "temperature": self.temperature,
            "max_tokens": self.max_tokens,
        }
        return json.dumps(body, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def request(
    tag: str,
    system: str | None,
    user: str,
    temperature: float = 0.0,
    max_tokens: int = 300,
    model_id: str = DEFAULT_MODEL,
) -> CompletionRequest:
    messages: list[tuple[str, str]] = []
    if system:
        messages.append(("system", system))
    messages.append(("user", user))
    return CompletionRequest(tag, tuple(messages), temperature, max_tokens, model_id)


# --- scripted backend -------------------------------------------------------


@dataclass
class ScriptedFixture:
    """Canned replies addressed by (operation tag, round index)."""

    entries: dict[tuple[str, int], list[str]] = field(default_factory=dict)

    def add(self, tag: str, round_index: int, reply: str) -> None:
        self.entries.setdefault((tag, round_index), []).append(reply)

    def __len__(self) -> int:
        return sum(len(v) for v in self.entries.values())


def load_fixture(path: str) -> ScriptedFixture:
    """Load a fixture file: one JSON object {tag, round, reply} per line.

    Duplicate (tag, round) keys append replies in file order; replies are
    preserved byte-exact, newlines included.
    """
    fixture = ScriptedFixture()
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                tag = obj["tag"]
                round_index = int(obj["round"])
                reply = obj["reply"]
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise GatewayError(f"{path}:{lineno}: malformed fixture entry: {exc}") from exc
            if not isinstance(tag, str) or not isinstance(reply, str):
                raise GatewayError(f"{path}:{lineno}: tag and reply must be strings")
            fixture.add(tag, round_index, reply)
    return fixture


class ScriptedBackend:
    """Deterministic completion backend replaying fixture replies.

    Per tag, replies are consumed in order within the current round; once a
    round's list is exhausted the cursor advances to the next round that has
    entries. A lookup with nothing left raises FixtureMissError. Performs no
    network activity whatsoever.
    """

    def __init__(self, fixture: ScriptedFixture):
        self._fixture = fixture
        self._cursor: dict[tuple[str, int], int] = {}
        self._round: dict[str, int] = {}
        self._lock = threading.Lock()
        self.calls: list[tuple[str, int, str]] = []

    def complete(self, req: CompletionRequest) -> str:
        tag = req.operation_tag
        with self._lock:
            rnd = self._round.get(tag, 0)
            while True:
                replies = self._fixture.entries.get((tag, rnd))
                used = self._cursor.get((tag, rnd), 0)
                if replies is not None and used < len(replies):
                    self._cursor[(tag, rnd)] = used + 1
                    self._round[tag] = rnd
                    reply = replies[used]
                    self.calls.append((tag, rnd, reply))
                    return reply
                later = [
                    r for (t, r) in self._fixture.entries if t == tag and r > rnd
                ]
                if not later:
                    raise FixtureMissError(
                        f"no scripted reply left for operation {tag!r} (round {rnd})"
                    )
                rnd = min(later)

    def calls_for(self, tag: str) -> int:
        return sum(1 for t, _, _ in self.calls if t == tag)


# --- remote backend ---------------------------------------------------------


def _requests_transport(url: str, body: bytes, headers: dict[str, str], timeout: float):
    import requests

    resp = requests.post(url, data=body, headers=headers, timeout=timeout)
    return resp.status_code, resp.content


class RemoteBackend:
    """OpenAI-compatible chat-completions client with bounded retries.

    Transient failures (timeouts, 429, 5xx) are retried up to 3 times with
    increasing backoff; other non-2xx statuses fail immediately.
    """

    def __init__(
        self,
        base_url: str | None = None,
        api_key: str | None = None,
        transport=None,
        sleep=time.sleep,
        timeout: float = 60.0,
    ):
        self.base_url = (base_url or os.environ.get(BASE_URL_ENV) or DEFAULT_BASE_URL).rstrip("/")
        self.api_key = api_key if api_key is not None else os.environ.get(API_KEY_ENV, "")
        self._transport = transport or _requests_transport
        self._sleep = sleep
        self._timeout = timeout

    def complete(self, req: CompletionRequest) -> str:
        url = f"{self.base_url}/v1/chat/completions"
        headers = {
            "Content-Type": "application/json",
            "Authorization": f"Bearer {self.api_key}",
        }
        body = req.wire_body()
        last_error: str = "no attempt made"
        for attempt in range(MAX_RETRIES):
            try:
                status, payload = self._transport(url, body, headers, self._timeout)
            except Exception as exc:  # connection errors, timeouts
                last_error = f"transport failure: {exc}"
                status, payload = None, b""
            if status is not None:
                if 200 <= status < 300:
                    return self._extract(payload)
                if status != 429 and status < 500:
                    raise GatewayError(f"completion request failed with status {status}")
                last_error = f"status {status}"
            if attempt < MAX_RETRIES - 1:
                self._sleep(BACKOFF_SECONDS[attempt])
        raise GatewayError(f"completion request failed after {MAX_RETRIES} attempts ({last_error})")

    @staticmethod
    def _extract(payload: bytes) -> str:
        try:
            obj = json.loads(payload)
            return obj["choices"][0]["message"]["content"]
        except (json.JSONDecodeError, KeyError, IndexError, TypeError) as exc:
            raise GatewayError(f"malformed completion response: {exc}") from exc


# --- embedding providers ----------------------------------------------------


@dataclass(frozen=True, slots=True)
class EmbeddingVector:
    values: np.ndarray
    empty_input: bool = False

    def __post_init__(self) -> None:
        if not np.all(np.isfinite(self.values)):
            raise ValueError("embedding entries must be finite")


class HashEmbeddingProvider:
    """Deterministic offline embedding: token-hash bucket counts, L2-normalized.

    Empty text maps to the zero vector, flagged via `empty_input`.
    """

    def __init__(self, dimension: int = 256):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        self.dimension = dimension

    def _bucket(self, token: str) -> int:
        digest = hashlib.sha256(token.encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "little") % self.dimension

    def embed(self, texts: list[str]) -> list[EmbeddingVector]:
        if not texts:
            raise ValueError("embed needs at least one text")
        out = []
        for text in texts:
            tokens = text.lower().split()
            vec = np.zeros(self.dimension, dtype=np.float64)
            for token in tokens:
                vec[self._bucket(token)] += 1.0
            norm = np.linalg.norm(vec)
            if norm > 0:
                vec /= norm
            out.append(EmbeddingVector(vec, empty_input=not tokens))
        return out


def embed(texts: list[str], provider) -> list[EmbeddingVector]:
    """One fixed-dimension vector per text, via the given provider."""
    return provider.embed(texts)
