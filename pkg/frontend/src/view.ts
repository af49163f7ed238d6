import type {
  SessionResultPayload,
  SessionStatePayload,
  SessionView,
} from "./types";

export function emptyView(): SessionView {
  return {
    sessionId: null,
    phase: null,
    requirement: null,
    pendingQuery: null,
    revisions: [],
    finalRequirement: null,
    finalFormula: null,
    errorBanner: null,
    busy: false,
  };
}

/** Project one server state (plus the result, once Done) into the view. */
export function viewFromState(
  state: SessionStatePayload,
  result: SessionResultPayload | null = null,
): SessionView {
  return {
    sessionId: state.session_id,
    phase: state.phase,
    requirement: state.requirement,
    pendingQuery: state.pending_query,
    revisions: state.revisions,
    finalRequirement: result ? result.final_requirement : null,
    finalFormula: result ? result.stl : null,
    errorBanner: state.error,
    busy: false,
  };
}

export function viewWithError(base: SessionView, message: string): SessionView {
  return { ...base, errorBanner: message, busy: false };
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function unescapeHtml(text: string): string {
  return text
    .replace(/&quot;/g, '"')
    .replace(/&gt;/g, ">")
    .replace(/&lt;/g, "<")
    .replace(/&amp;/g, "&");
}

function revisionRows(view: SessionView): string {
  if (view.revisions.length === 0) {
    return '<tr class="empty-row"><td colspan="4">no clarification rounds yet</td></tr>';
  }
  return view.revisions
    .map(
      (rev) => `<tr class="revision-row">
  <td class="rev-before">${escapeHtml(rev.text_before)}</td>
  <td class="rev-query">${escapeHtml(rev.query)}</td>
  <td class="rev-answer">${escapeHtml(rev.answer)}</td>
  <td class="rev-after">${escapeHtml(rev.text_after)}</td>
</tr>`,
    )
    .join("\n");
}

function querySection(view: SessionView): string {
  if (view.phase === "Aborted") {
    return '<section id="aborted">session aborted; see the transcript for the failing step</section>';
  }
  if (!view.pendingQuery) {
    return "";
  }
  const disabled = view.busy ? " disabled" : "";
  return `<section id="pending">
  <p id="pending-query">${escapeHtml(view.pendingQuery)}</p>
  <form id="answer-form">
    <input id="answer-input" name="answer" autocomplete="off"${disabled} />
    <button id="answer-submit" type="submit"${disabled}>Answer</button>
  </form>
</section>`;
}

function resultSection(view: SessionView): string {
  if (view.finalFormula === null) {
    return "";
  }
  return `<section id="result">
  <p id="final-requirement">${escapeHtml(view.finalRequirement ?? "")}</p>
  <code id="final-formula">${escapeHtml(view.finalFormula)}</code>
</section>`;
}

/** Pure rendering: the document body is a function of the view alone. */
export function renderView(view: SessionView): string {
  const banner = view.errorBanner
    ? `<div id="error-banner" role="alert">${escapeHtml(view.errorBanner)}` +
      '<button id="retry">Retry</button></div>'
    : "";
  const phase = view.phase
    ? `<span id="phase" class="phase-${view.phase}">${escapeHtml(view.phase)}</span>`
    : '<span id="phase" class="phase-none">no session</span>';
  const requirement = view.requirement
    ? `<p id="requirement">${escapeHtml(view.requirement)}</p>`
    : "";
  return `${banner}
<header>${phase}${view.sessionId ? ` <span id="session-id">${escapeHtml(view.sessionId)}</span>` : ""}</header>
${requirement}
${querySection(view)}
<table id="revision-table">
  <thead><tr><th>before</th><th>query</th><th>answer</th><th>after</th></tr></thead>
  <tbody>
${revisionRows(view)}
  </tbody>
</table>
${resultSection(view)}`;
}

/** Text content of the element with the given id in rendered markup. */
export function textContentOf(html: string, id: string): string | null {
  const match = html.match(
    new RegExp(`<[^>]*id="${id}"[^>]*>([\\s\\S]*?)</[a-z]+>`),
  );
  return match ? unescapeHtml(match[1]) : null;
}

export function countRevisionRows(html: string): number {
  return (html.match(/class="revision-row"/g) ?? []).length;
}
