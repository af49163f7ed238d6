#!/usr/bin/env python3
"""Drive the session HTTP API end to end: start the scripted server in a
background thread, create a session, answer both queries over plain HTTP,
and fetch the final formula."""

import json
import threading
import time
import urllib.request
from pathlib import Path

import uvicorn

from clarifystl import clarify, detection, gateway
from clarifystl.server import create_app

HERE = Path(__file__).parent
PORT = 8765
BASE = f"http://127.0.0.1:{PORT}"

fixture = gateway.load_fixture(str(HERE / "data" / "session.fixture"))


def factory(text: str) -> clarify.ClarificationSession:
    backend = gateway.ScriptedBackend(fixture)
    return clarify.ClarificationSession(
        text,
        lambda t: detection.detect_vagueness(t, backend),
        lambda t: detection.detect_ambiguity_prompt(t, backend),
        backend,
    )


server = uvicorn.Server(
    uvicorn.Config(create_app(factory), host="127.0.0.1", port=PORT, log_level="error")
)
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)


def call(method: str, path: str, body: dict | None = None) -> tuple[int, dict]:
    data = json.dumps(body).encode() if body is not None else None
    request = urllib.request.Request(
        BASE + path, data=data, method=method,
        headers={"Content-Type": "application/json"},
    )
    try:
        with urllib.request.urlopen(request) as response:
            return response.status, json.loads(response.read())
    except urllib.error.HTTPError as error:
        return error.code, json.loads(error.read())


status, session = call("POST", "/api/sessions", {
    "requirement": (
        "During 10-150 seconds, if signal x1 exceeds 0.2, then signal x2 "
        "will decrease for the next 30 seconds"
    )
})
print(f"POST /api/sessions -> {status}")
print("  phase:", session["phase"])
print("  pending query:", session["pending_query"])
sid = session["session_id"]

for answer in ("0.5", "the first time"):
    status, state = call("POST", f"/api/sessions/{sid}/answer", {"answer": answer})
    print(f"POST answer {answer!r} -> {status}, phase {state['phase']}, "
          f"next query: {state['pending_query']}")

status, result = call("GET", f"/api/sessions/{sid}/result")
print(f"GET result -> {status}")
print("  final requirement:", result["final_requirement"])
print("  formula:          ", result["stl"])

status, body = call("GET", f"/api/sessions/{sid}/result")
assert status == 200
status, _ = call("POST", f"/api/sessions/{sid}/answer", {"answer": "extra"})
print(f"answering a finished session -> {status} (no pending query)")

server.should_exit = True
thread.join(timeout=5)
