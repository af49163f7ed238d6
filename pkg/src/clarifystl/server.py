"""HTTP/JSON API around clarification sessions.

Endpoints:
    POST /api/sessions             {"requirement": str} -> 201 summary
    GET  /api/sessions/{id}        -> 200 full state
    POST /api/sessions/{id}/answer {"answer": str} -> 200 updated state
    GET  /api/sessions/{id}/result -> 200 final text + formula | 409

404 unknown session, 422 empty requirement/answer, 409 answer without a
pending query or result before Done.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .clarify import ClarificationSession, Phase
from .stl.printer import render


class SessionStartBody(BaseModel):
    requirement: str


class AnswerBody(BaseModel):
    answer: str


def _session_summary(session_id: str, session: ClarificationSession) -> dict:
    return {
        "session_id": session_id,
        "phase": session.state.phase.value,
        "pending_query": session.pending_query.text if session.pending_query else None,
    }


def _session_state(session_id: str, session: ClarificationSession) -> dict:
    return {
        **_session_summary(session_id, session),
        "requirement": session.requirement.text,
        "iterations": {
            "vagueness": session.state.vagueness_iterations,
            "ambiguity": session.state.ambiguity_iterations,
        },
        "revisions": [
            {
                "text_before": rev.text_before,
                "query": rev.query,
                "answer": rev.answer,
                "text_after": rev.text_after,
            }
            for rev in session.requirement.revisions
        ],
        "transcript_summary": [
            {"seq": e.seq, "phase": e.phase, "kind": e.kind} for e in session.transcript
        ],
        "error": session.error,
    }


def create_app(session_factory) -> FastAPI:
    """Session API over a factory (requirement text) -> ClarificationSession."""
    app = FastAPI(title="clarification sessions")
    sessions: dict[str, ClarificationSession] = {}
    lock = threading.Lock()

    def _get(session_id: str) -> ClarificationSession | None:
        with lock:
            return sessions.get(session_id)

    @app.post("/api/sessions", status_code=201)
    def start_session(body: SessionStartBody):
        if not body.requirement.strip():
            return JSONResponse({"error": "requirement must be non-empty"}, status_code=422)
        session = session_factory(body.requirement.strip())
        session_id = uuid.uuid4().hex[:12]
        with lock:
            sessions[session_id] = session
        session.start()
        return _session_summary(session_id, session)

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        session = _get(session_id)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        return _session_state(session_id, session)

    @app.post("/api/sessions/{session_id}/answer")
    def post_answer(session_id: str, body: AnswerBody):
        session = _get(session_id)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        if not body.answer.strip():
            return JSONResponse({"error": "answer must be non-empty"}, status_code=422)
        if session.pending_query is None:
            return JSONResponse({"error": "no pending query"}, status_code=409)
        session.submit_answer(body.answer.strip())
        return _session_state(session_id, session)

    @app.get("/api/sessions/{session_id}/result")
    def get_result(session_id: str):
        session = _get(session_id)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        if session.state.phase is not Phase.DONE or session.final_formula is None:
            return JSONResponse(
                {"error": f"session is {session.state.phase.value}, not Done"},
                status_code=409,
            )
        return {
            "final_requirement": session.requirement.text,
            "stl": render(session.final_formula),
        }

    return app
