import { beforeEach, describe, expect, it } from "vitest";

import { GatewayClient } from "../src/api.js";
import { DEFAULT_BUDGET_PERCENT, PlanView } from "../src/planView.js";
import { Tooltip } from "../src/tooltip.js";
import { ARTICLE, settle, stubFetch, type RecordedCall } from "./helpers.js";

const QUESTIONS = {
  schema_version: 1,
  backend: "template_local",
  questions: [
    { question_id: "q000", text: "What does the article say about valleys?", answer_unit: 0 },
    { question_id: "q001", text: "What does the article say about dough?", answer_unit: 1 },
  ],
};

function routes(method: string, url: string, body: unknown) {
  if (method === "GET" && url.includes("/questions")) {
    return { payload: QUESTIONS };
  }
  if (method === "GET" && url.includes("/time-filter")) {
    return {
      payload: {
        schema_version: 1,
        budget: { estimated_total_seconds: 120, user_budget_seconds: 60, rate: 0.5 },
        selected_sentence_ids: [0, 2],
        estimated_selected_seconds: 48,
        highlights: [
          { paragraph: 0, start: 0, end: 23 },
          { paragraph: 1, start: 0, end: 19 },
        ],
      },
    };
  }
  if (method === "POST" && url.includes("/question-filter")) {
    const ids = (body as { question_ids: string[] }).question_ids;
    expect(ids).toEqual(["q000"]);
    return {
      payload: {
        schema_version: 1,
        highlights: [{ sentence_id: 0, question_id: "q000" }],
        tooltips: { "0": "What does the article say about valleys?" },
      },
    };
  }
  return undefined;
}

describe("PlanView", () => {
  let view: PlanView;
  let calls: RecordedCall[];
  let root: HTMLElement;
  let tooltip: Tooltip;

  beforeEach(async () => {
    document.body.innerHTML = "<main id='stage'></main>";
    root = document.getElementById("stage") as HTMLElement;
    const stub = stubFetch(routes);
    calls = stub.calls;
    tooltip = new Tooltip(document);
    view = new PlanView({
      root,
      article: ARTICLE,
      client: new GatewayClient("", stub.fetchFn),
      tooltip,
      onStartReading: () => undefined,
    });
    await view.init();
  });

  it("defaults the slider to half the estimated reading time", () => {
    expect(view.slider.value).toBe(String(DEFAULT_BUDGET_PERCENT));
    expect(view.budgetSeconds).toBe(60);
    const initial = calls.find((c) => c.url.includes("/time-filter"));
    expect(initial?.url).toContain("budget_seconds=60");
    expect(root.querySelector(".budget-label")?.textContent).toBe("60.0 s of 120.0 s");
  });

  it("marks the sentences the gateway selected for the budget", () => {
    expect(view.sentenceElement(0)?.classList.contains("time-hit")).toBe(true);
    expect(view.sentenceElement(2)?.classList.contains("time-hit")).toBe(true);
    expect(view.sentenceElement(1)?.classList.contains("time-hit")).toBe(false);
  });

  it("requests a new selection when the slider moves", async () => {
    view.slider.value = "25";
    view.slider.dispatchEvent(new Event("change"));
    await settle();
    const last = calls.filter((c) => c.url.includes("/time-filter")).pop();
    expect(last?.url).toContain("budget_seconds=30");
  });

  it("starts with no questions selected and no question highlights", () => {
    const boxes = root.querySelectorAll<HTMLInputElement>("input[type=checkbox]");
    expect(boxes.length).toBe(2);
    expect(Array.from(boxes).every((b) => !b.checked)).toBe(true);
    expect(root.querySelectorAll(".question-hit").length).toBe(0);
    expect(calls.some((c) => c.url.includes("/question-filter"))).toBe(false);
  });

  it("highlights answer sentences for checked questions", async () => {
    const box = root.querySelector<HTMLInputElement>("input[value=q000]") as HTMLInputElement;
    box.checked = true;
    box.dispatchEvent(new Event("change"));
    await settle();
    expect(view.sentenceElement(0)?.classList.contains("question-hit")).toBe(true);
    expect(root.querySelectorAll(".question-hit").length).toBe(1);
  });

  it("shows the owning question in a tooltip when hovering its highlight", async () => {
    const box = root.querySelector<HTMLInputElement>("input[value=q000]") as HTMLInputElement;
    box.checked = true;
    box.dispatchEvent(new Event("change"));
    await settle();

    const hit = view.sentenceElement(0) as HTMLElement;
    hit.dispatchEvent(new MouseEvent("mouseenter", { clientX: 10, clientY: 20 }));
    expect(tooltip.visible).toBe(true);
    expect(tooltip.text).toBe("What does the article say about valleys?");

    hit.dispatchEvent(new MouseEvent("mouseleave"));
    expect(tooltip.visible).toBe(false);

    // a sentence outside any selected question stays tooltip-free
    const plain = view.sentenceElement(3) as HTMLElement;
    plain.dispatchEvent(new MouseEvent("mouseenter", { clientX: 1, clientY: 2 }));
    expect(tooltip.visible).toBe(false);
  });

  it("clears question highlights when every box is unchecked again", async () => {
    const box = root.querySelector<HTMLInputElement>("input[value=q000]") as HTMLInputElement;
    box.checked = true;
    box.dispatchEvent(new Event("change"));
    await settle();
    box.checked = false;
    box.dispatchEvent(new Event("change"));
    await settle();
    expect(root.querySelectorAll(".question-hit").length).toBe(0);
    // unchecking everything needs no round trip
    expect(calls.filter((c) => c.url.includes("/question-filter")).length).toBe(1);
  });
});
