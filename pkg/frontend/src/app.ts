import { SessionApi } from "./api";
import { ClarificationConsole } from "./console";
import { renderView } from "./view";
import type { SessionView } from "./types";

/** Browser bootstrap: wire the start/answer forms to the console and
 * re-render the main region after every server response. The session id
 * lives in the URL fragment so a reload re-attaches. */
export function mount(root: HTMLElement, baseUrl = ""): ClarificationConsole {
  const api = new SessionApi(baseUrl);
  const controller = new ClarificationConsole(api);

  const startForm = document.createElement("form");
  startForm.id = "start-form";
  startForm.innerHTML =
    '<textarea id="requirement-input" rows="3" placeholder="natural language requirement"></textarea>' +
    '<button type="submit">Start session</button>';
  const main = document.createElement("main");
  main.id = "session-view";
  root.append(startForm, main);

  const paint = (view: SessionView) => {
    main.innerHTML = renderView(view);
    if (view.sessionId) {
      window.location.hash = view.sessionId;
    }
    const answerForm = main.querySelector<HTMLFormElement>("#answer-form");
    answerForm?.addEventListener("submit", async (event) => {
      event.preventDefault();
      const input = main.querySelector<HTMLInputElement>("#answer-input");
      paint(await controller.answer(input?.value ?? ""));
    });
    main.querySelector("#retry")?.addEventListener("click", async () => {
      paint(await controller.refresh());
    });
  };

  startForm.addEventListener("submit", async (event) => {
    event.preventDefault();
    const input = document.querySelector<HTMLTextAreaElement>("#requirement-input");
    paint(await controller.start(input?.value ?? ""));
  });

  const fragment = window.location.hash.slice(1);
  if (fragment) {
    void controller.attach(fragment).then(paint);
  }
  return controller;
}

declare global {
  interface Window {
    clarifyConsole?: ClarificationConsole;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  window.clarifyConsole = mount(document.getElementById("app") as HTMLElement);
}
