import { describe, expect, it } from "vitest";

import type { SessionStatePayload } from "../src/types";
import {
  countRevisionRows,
  emptyView,
  renderView,
  textContentOf,
  viewFromState,
  viewWithError,
} from "../src/view";

const baseState: SessionStatePayload = {
  session_id: "abc123",
  phase: "VaguenessLoop",
  pending_query: "What specific value should signal x2 decrease?",
  requirement: "signal x2 will decrease for the next 30 seconds",
  iterations: { vagueness: 1, ambiguity: 0 },
  revisions: [],
  transcript_summary: [],
  error: null,
};

describe("viewFromState", () => {
  it("is a pure projection of the server payload", () => {
    const view = viewFromState(baseState);
    expect(view.sessionId).toBe("abc123");
    expect(view.phase).toBe("VaguenessLoop");
    expect(view.pendingQuery).toBe(baseState.pending_query);
    expect(view.finalFormula).toBeNull();
    // same payload, same view
    expect(viewFromState(baseState)).toEqual(view);
  });

  it("attaches the result only when provided", () => {
    const view = viewFromState(
      { ...baseState, phase: "Done", pending_query: null },
      { final_requirement: "final text", stl: "G[0,5](x > 1)" },
    );
    expect(view.finalFormula).toBe("G[0,5](x > 1)");
    expect(view.finalRequirement).toBe("final text");
  });
});

describe("renderView snapshots", () => {
  it("renders the pending query with an enabled answer form", () => {
    const html = renderView(viewFromState(baseState));
    expect(html).toMatchSnapshot();
    expect(textContentOf(html, "pending-query")).toBe(baseState.pending_query);
    expect(html).not.toContain("disabled");
  });

  it("disables the answer controls while a mutation is in flight", () => {
    const html = renderView({ ...viewFromState(baseState), busy: true });
    expect(html).toContain('<input id="answer-input" name="answer" autocomplete="off" disabled');
    expect(html).toContain("disabled>Answer</button>");
  });

  it("renders revision rows with before/query/answer/after cells", () => {
    const state: SessionStatePayload = {
      ...baseState,
      revisions: [
        { text_before: "a", query: "q1?", answer: "0.5", text_after: "b" },
        { text_before: "b", query: "q2?", answer: "first", text_after: "c" },
      ],
    };
    const html = renderView(viewFromState(state));
    expect(html).toMatchSnapshot();
    expect(countRevisionRows(html)).toBe(2);
  });

  it("renders the final formula with HTML-escaped comparators", () => {
    const view = viewFromState(
      { ...baseState, phase: "Done", pending_query: null },
      {
        final_requirement: "final text",
        stl: "F[10,150](x1 > 0.2) -> G[0,30](x2 < 0.5)",
      },
    );
    const html = renderView(view);
    expect(html).toContain("&gt;");
    expect(textContentOf(html, "final-formula")).toBe(
      "F[10,150](x1 > 0.2) -> G[0,30](x2 < 0.5)",
    );
  });

  it("renders the error banner with a retry action", () => {
    const html = renderView(viewWithError(emptyView(), "server unreachable"));
    expect(html).toMatchSnapshot();
    expect(textContentOf(html, "error-banner")).toContain("server unreachable");
    expect(html).toContain('id="retry"');
  });

  it("marks aborted sessions", () => {
    const html = renderView(
      viewFromState({ ...baseState, phase: "Aborted", pending_query: null }),
    );
    expect(html).toContain('id="aborted"');
  });
});
