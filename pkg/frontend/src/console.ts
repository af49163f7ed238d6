import { ApiError, SessionApi } from "./api";
import type { SessionResultPayload, SessionStatePayload, SessionView } from "./types";
import { emptyView, viewFromState, viewWithError } from "./view";

/** Drives one session: validation, one mutation in flight at a time, and
 * view assembly from whichever server response arrived last. */
export class ClarificationConsole {
  private view: SessionView = emptyView();
  private inFlight = false;

  constructor(private readonly api: SessionApi) {}

  current(): SessionView {
    return this.view;
  }

  /** Create a session. Empty text never reaches the server. */
  async start(requirementText: string): Promise<SessionView> {
    const text = requirementText.trim();
    if (!text) {
      this.view = viewWithError(this.view, "enter a requirement first");
      return this.view;
    }
    try {
      const summary = await this.api.startSession(text);
      this.view = await this.fetchView(summary.session_id);
    } catch (error) {
      this.view = viewWithError(this.view, describe(error));
    }
    return this.view;
  }

  /** Answer the pending query. Whitespace-only input never reaches the
   * server, and a second submit while one is in flight is ignored. */
  async answer(answerText: string): Promise<SessionView> {
    const text = answerText.trim();
    const sessionId = this.view.sessionId;
    if (!sessionId) {
      this.view = viewWithError(this.view, "no active session");
      return this.view;
    }
    if (!text) {
      this.view = viewWithError(this.view, "enter an answer first");
      return this.view;
    }
    if (this.inFlight) {
      return this.view;
    }
    this.inFlight = true;
    this.view = { ...this.view, busy: true, errorBanner: null };
    try {
      const state = await this.api.submitAnswer(sessionId, text);
      this.view = viewFromState(state, await this.resultFor(state));
    } catch (error) {
      this.view = viewWithError(this.view, describe(error));
    } finally {
      this.inFlight = false;
    }
    return this.view;
  }

  /** GET-only refresh; never mutates server state. */
  async refresh(): Promise<SessionView> {
    const sessionId = this.view.sessionId;
    if (!sessionId) {
      return this.view;
    }
    try {
      this.view = await this.fetchView(sessionId);
    } catch (error) {
      this.view = viewWithError(this.view, describe(error));
    }
    return this.view;
  }

  /** Re-attach to an existing session (e.g. from the URL fragment). */
  async attach(sessionId: string): Promise<SessionView> {
    try {
      this.view = await this.fetchView(sessionId);
    } catch (error) {
      this.view = viewWithError(this.view, describe(error));
    }
    return this.view;
  }

  private async fetchView(sessionId: string): Promise<SessionView> {
    const state = await this.api.getSession(sessionId);
    return viewFromState(state, await this.resultFor(state));
  }

  private async resultFor(
    state: SessionStatePayload,
  ): Promise<SessionResultPayload | null> {
    if (state.phase !== "Done") {
      return null;
    }
    return this.api.getResult(state.session_id);
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return error.status === 0 ? error.message : `${error.status}: ${error.message}`;
  }
  return String(error);
}
