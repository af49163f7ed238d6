export interface RevisionRow {
  text_before: string;
  query: string;
  answer: string;
  text_after: string;
}

export interface SessionSummary {
  session_id: string;
  phase: string;
  pending_query: string | null;
}

export interface SessionStatePayload extends SessionSummary {
  requirement: string;
  iterations: { vagueness: number; ambiguity: number };
  revisions: RevisionRow[];
  transcript_summary: Array<{ seq: number; phase: string; kind: string }>;
  error: string | null;
}

export interface SessionResultPayload {
  final_requirement: string;
  stl: string;
}

/** Everything the console renders; derived solely from server responses. */
export interface SessionView {
  sessionId: string | null;
  phase: string | null;
  requirement: string | null;
  pendingQuery: string | null;
  revisions: RevisionRow[];
  finalRequirement: string | null;
  finalFormula: string | null;
  errorBanner: string | null;
  /** true while a mutation request is in flight; disables the answer form */
  busy: boolean;
}
