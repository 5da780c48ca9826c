import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { GatewayClient, type FocusInterval } from "../src/api.js";
import { FocusTracker } from "../src/focusTracker.js";
import { FocusView } from "../src/focusView.js";
import { ARTICLE, settle, stubFetch, type RecordedCall } from "./helpers.js";

const FINISH_PAYLOAD = {
  schema_version: 1,
  backend: "weighted_extractive_local",
  word_budget: 3,
  fell_back: false,
  sentences: ["Glaciers carve valleys."],
  dwell_control_enabled: true,
};

function key(name: string): void {
  document.dispatchEvent(new KeyboardEvent("keydown", { key: name }));
}

describe("FocusView", () => {
  let view: FocusView;
  let calls: RecordedCall[];
  let posted: FocusInterval[];
  let finished: unknown;
  let clockNow: number;
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = "<main id='stage'></main>";
    root = document.getElementById("stage") as HTMLElement;
    clockNow = 100;
    posted = [];
    finished = null;
    const stub = stubFetch((method, url) => {
      if (url.includes("/reflection")) {
        return {
          payload: {
            schema_version: 1,
            question_id: "r000",
            text: "What does the article say about valleys?",
            paragraph_index: 0,
          },
        };
      }
      if (url.includes("/finish")) {
        return { payload: FINISH_PAYLOAD };
      }
      return { payload: { schema_version: 1 } };
    });
    calls = stub.calls;
    const tracker = new FocusTracker(
      async (interval) => {
        posted.push(interval);
      },
      () => clockNow,
    );
    view = new FocusView({
      root,
      article: ARTICLE,
      client: new GatewayClient("", stub.fetchFn),
      sessionId: "s1",
      tracker,
      onFinished: (payload) => {
        finished = payload;
      },
    });
    view.mount();
  });

  afterEach(() => {
    view.unmount();
  });

  it("dims every paragraph except the focused one", () => {
    const paragraphs = root.querySelectorAll(".focus-paragraphs p");
    expect(paragraphs.length).toBe(3);
    expect(paragraphs[0].classList.contains("dimmed")).toBe(false);
    expect(paragraphs[1].classList.contains("dimmed")).toBe(true);
    expect(paragraphs[2].classList.contains("dimmed")).toBe(true);
  });

  it("walks paragraphs with the arrow keys and reports the dwell", async () => {
    clockNow = 107.5;
    key("ArrowDown");
    await settle();
    expect(view.currentParagraph).toBe(1);
    expect(posted).toEqual([{ paragraph_index: 0, enter_ts: 100, leave_ts: 107.5 }]);

    clockNow = 110;
    key("ArrowUp");
    await settle();
    expect(view.currentParagraph).toBe(0);
    expect(posted[1]).toEqual({ paragraph_index: 1, enter_ts: 107.5, leave_ts: 110 });
  });

  it("stays on the last paragraph and shows the end marker", () => {
    key("ArrowDown");
    key("ArrowDown");
    expect(view.currentParagraph).toBe(2);
    key("ArrowDown");
    expect(view.currentParagraph).toBe(2);
    const marker = root.querySelector<HTMLElement>(".end-marker") as HTMLElement;
    expect(marker.style.display).toBe("block");
  });

  it("ignores ArrowUp at the first paragraph", () => {
    key("ArrowUp");
    expect(view.currentParagraph).toBe(0);
  });

  it("suspends dwell while paused and restores the normal view", async () => {
    clockNow = 103;
    const pause = root.querySelector<HTMLButtonElement>(".pause-resume") as HTMLButtonElement;
    pause.click();
    await settle();
    expect(view.isPaused).toBe(true);
    expect(posted).toEqual([{ paragraph_index: 0, enter_ts: 100, leave_ts: 103 }]);
    // paused shows the full article without dimming, and arrows do nothing
    expect(root.querySelectorAll(".focus-paragraphs p.dimmed").length).toBe(0);
    key("ArrowDown");
    expect(view.currentParagraph).toBe(0);

    clockNow = 150;
    pause.click();
    expect(view.isPaused).toBe(false);
    clockNow = 151;
    key("ArrowDown");
    await settle();
    // the paused stretch 103..150 never reached the tracker
    expect(posted[1]).toEqual({ paragraph_index: 0, enter_ts: 150, leave_ts: 151 });
  });

  it("saves a note against the focused paragraph", async () => {
    key("ArrowDown");
    const input = root.querySelector<HTMLInputElement>(".note-input") as HTMLInputElement;
    input.value = "  check the proofing time  ";
    (root.querySelector(".save-note") as HTMLButtonElement).click();
    await settle();
    const call = calls.find((c) => c.url.includes("/annotations"));
    expect(call?.body).toEqual({
      kind: "note",
      paragraph_index: 1,
      payload: "check the proofing time",
    });
    expect(input.value).toBe("");
  });

  it("posts a highlight for the selected character span", async () => {
    const paragraph = root.querySelector('[data-paragraph="0"]') as HTMLElement;
    const textNode = paragraph.firstChild as Text;
    const range = document.createRange();
    range.setStart(textNode, 0);
    range.setEnd(textNode, 23);
    const selection = document.getSelection();
    selection?.removeAllRanges();
    selection?.addRange(range);

    (root.querySelector(".add-highlight") as HTMLButtonElement).click();
    await settle();
    const call = calls.find((c) => c.url.includes("/annotations"));
    expect(call?.body).toEqual({ kind: "highlight", paragraph_index: 0, span: [0, 23] });
  });

  it("asks for a selection before highlighting", async () => {
    document.getSelection()?.removeAllRanges();
    (root.querySelector(".add-highlight") as HTMLButtonElement).click();
    await settle();
    expect(calls.some((c) => c.url.includes("/annotations"))).toBe(false);
    expect(root.querySelector(".focus-status")?.textContent).toContain("Select text");
  });

  it("runs the reflection flow without ever rendering an answer", async () => {
    (root.querySelector(".reflect") as HTMLButtonElement).click();
    await settle();
    expect(root.querySelector(".reflection-question")?.textContent).toBe(
      "What does the article say about valleys?",
    );
    // the reflection panel shows the question alone, never an answer
    const panel = root.querySelector(".reflection") as HTMLElement;
    expect(panel.textContent).toBe("What does the article say about valleys?Submit answer");

    const answer = root.querySelector<HTMLTextAreaElement>(
      ".reflection-answer",
    ) as HTMLTextAreaElement;
    answer.value = "They are carved by ice.";
    (root.querySelector(".submit-reflection") as HTMLButtonElement).click();
    await settle();
    const call = calls.find((c) => c.url.includes("/annotations"));
    expect(call?.body).toEqual({
      kind: "reflection_answer",
      paragraph_index: 0,
      payload: "They are carved by ice.",
    });
    expect(root.querySelector(".reflection-answer")).toBeNull();
  });

  it("flushes dwell before finishing and hands the summary payload over", async () => {
    clockNow = 160;
    (root.querySelector(".finish-session") as HTMLButtonElement).click();
    await settle();
    expect(posted).toEqual([{ paragraph_index: 0, enter_ts: 100, leave_ts: 160 }]);
    const finish = calls.find((c) => c.url.includes("/finish"));
    expect(finish?.method).toBe("POST");
    expect(finished).toEqual(FINISH_PAYLOAD);
  });
});
