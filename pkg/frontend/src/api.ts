import type {
  SessionResultPayload,
  SessionStatePayload,
  SessionSummary,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, init);
  } catch (cause) {
    throw new ApiError(0, `server unreachable: ${String(cause)}`);
  }
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    // non-JSON error bodies keep the status-based message below
  }
  if (!response.ok) {
    const detail =
      body && typeof body === "object" && "error" in body
        ? String((body as { error: unknown }).error)
        : response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

/** Typed client for the session HTTP API. */
export class SessionApi {
  constructor(readonly baseUrl: string) {}

  startSession(requirement: string): Promise<SessionSummary> {
    return request(`${this.baseUrl}/api/sessions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ requirement }),
    });
  }

  getSession(sessionId: string): Promise<SessionStatePayload> {
    return request(`${this.baseUrl}/api/sessions/${sessionId}`);
  }

  submitAnswer(sessionId: string, answer: string): Promise<SessionStatePayload> {
    return request(`${this.baseUrl}/api/sessions/${sessionId}/answer`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ answer }),
    });
  }

  getResult(sessionId: string): Promise<SessionResultPayload> {
    return request(`${this.baseUrl}/api/sessions/${sessionId}/result`);
  }
}
