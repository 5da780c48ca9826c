import { GatewayClient } from "./api.js";
import { App } from "./app.js";

function mountIntake(): void {
  const intake = document.getElementById("intake");
  const stage = document.getElementById("stage");
  if (!intake || !stage) {
    return;
  }
  const body = intake.querySelector<HTMLTextAreaElement>("textarea");
  const kind = intake.querySelector<HTMLSelectElement>("select");
  const load = intake.querySelector<HTMLButtonElement>("button");
  const error = intake.querySelector<HTMLElement>(".intake-error");
  if (!body || !kind || !load || !error) {
    return;
  }

  const app = new App(stage, new GatewayClient(""));
  load.addEventListener("click", () => {
    error.textContent = "";
    app
      .loadArticle(body.value, kind.value)
      .then(() => {
        intake.style.display = "none";
      })
      .catch((err: unknown) => {
        error.textContent = err instanceof Error ? err.message : String(err);
      });
  });
}

document.addEventListener("DOMContentLoaded", mountIntake);
