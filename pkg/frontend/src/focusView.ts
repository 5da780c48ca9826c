import { GatewayClient } from "./api.js";
import { FocusTracker } from "./focusTracker.js";
import type { ArticlePayload, FinishPayload } from "./types.js";

export interface FocusViewOptions {
  root: HTMLElement;
  article: ArticlePayload;
  client: GatewayClient;
  sessionId: string;
  tracker: FocusTracker;
  onFinished: (payload: FinishPayload) => void;
}

export class FocusView {
  private index = 0;
  private paused = false;
  private atEnd = false;
  private readonly doc: Document;
  private readonly paragraphBox: HTMLElement;
  private readonly endMarker: HTMLElement;
  private readonly pauseButton: HTMLButtonElement;
  private readonly noteInput: HTMLInputElement;
  private readonly reflectionBox: HTMLElement;
  private readonly statusBox: HTMLElement;
  private reflectionAnswer: HTMLTextAreaElement | null = null;
  private reflectionParagraph = -1;

  constructor(private readonly opts: FocusViewOptions) {
    this.doc = opts.root.ownerDocument;
    opts.root.innerHTML = "";

    const toolbar = this.doc.createElement("div");
    toolbar.className = "focus-toolbar";

    this.pauseButton = this.button(toolbar, "pause-resume", "Pause", () => this.togglePause());
    this.button(toolbar, "add-highlight", "Highlight selection", () => {
      void this.saveHighlight();
    });

    this.noteInput = this.doc.createElement("input");
    this.noteInput.type = "text";
    this.noteInput.className = "note-input";
    this.noteInput.placeholder = "Write a note for this paragraph";
    toolbar.appendChild(this.noteInput);
    this.button(toolbar, "save-note", "Save note", () => {
      void this.saveNote();
    });
    this.button(toolbar, "reflect", "Reflect", () => {
      void this.openReflection();
    });
    this.button(toolbar, "finish-session", "Finish", () => {
      void this.finish();
    });

    this.statusBox = this.doc.createElement("div");
    this.statusBox.className = "focus-status";
    this.reflectionBox = this.doc.createElement("div");
    this.reflectionBox.className = "reflection";
    this.paragraphBox = this.doc.createElement("div");
    this.paragraphBox.className = "focus-paragraphs";
    this.endMarker = this.doc.createElement("div");
    this.endMarker.className = "end-marker";
    this.endMarker.textContent = "End of article";
    this.endMarker.style.display = "none";

    opts.root.appendChild(toolbar);
    opts.root.appendChild(this.statusBox);
    opts.root.appendChild(this.reflectionBox);
    opts.root.appendChild(this.paragraphBox);
    opts.root.appendChild(this.endMarker);
  }

  get currentParagraph(): number {
    return this.index;
  }

  get isPaused(): boolean {
    return this.paused;
  }

  mount(): void {
    this.doc.addEventListener("keydown", this.onKeyDown);
    this.opts.tracker.enter(this.index);
    this.render();
  }

  unmount(): void {
    this.doc.removeEventListener("keydown", this.onKeyDown);
  }

  private onKeyDown = (event: KeyboardEvent): void => {
    if (this.paused) {
      return;
    }
    if (event.key === "ArrowDown") {
      event.preventDefault();
      this.step(1);
    } else if (event.key === "ArrowUp") {
      event.preventDefault();
      this.step(-1);
    }
  };

  private step(delta: number): void {
    const next = this.index + delta;
    if (next >= this.opts.article.paragraphs.length) {
      this.atEnd = true; // stay put, just mark the boundary
      this.render();
      return;
    }
    if (next < 0) {
      return;
    }
    this.index = next;
    this.atEnd = false;
    this.opts.tracker.enter(next);
    this.render();
  }

  togglePause(): void {
    if (this.paused) {
      this.paused = false;
      this.pauseButton.textContent = "Pause";
      this.opts.tracker.enter(this.index);
    } else {
      this.paused = true;
      this.pauseButton.textContent = "Resume";
      this.opts.tracker.leave(); // no dwell accrues while paused
    }
    this.render();
  }

  private async saveNote(): Promise<void> {
    const text = this.noteInput.value.trim();
    if (!text) {
      this.status("Type a note first.");
      return;
    }
    try {
      await this.opts.client.postAnnotation(this.opts.sessionId, {
        kind: "note",
        paragraph_index: this.index,
        payload: text,
      });
      this.noteInput.value = "";
      this.status("Note saved.");
    } catch (error) {
      this.status(this.describe(error));
    }
  }

  private async saveHighlight(): Promise<void> {
    const span = this.selectionSpan();
    if (span === null) {
      this.status("Select text in the current paragraph first.");
      return;
    }
    try {
      await this.opts.client.postAnnotation(this.opts.sessionId, {
        kind: "highlight",
        paragraph_index: this.index,
        span,
      });
      this.status("Highlight saved.");
    } catch (error) {
      this.status(this.describe(error));
    }
  }

  private selectionSpan(): [number, number] | null {
    const selection = this.doc.getSelection();
    if (!selection || selection.isCollapsed) {
      return null;
    }
    const current = this.paragraphBox.querySelector<HTMLElement>(
      `[data-paragraph="${this.index}"]`,
    );
    const textNode = current?.firstChild ?? null;
    if (
      textNode === null ||
      selection.anchorNode !== textNode ||
      selection.focusNode !== textNode
    ) {
      return null;
    }
    const start = Math.min(selection.anchorOffset, selection.focusOffset);
    const end = Math.max(selection.anchorOffset, selection.focusOffset);
    return start === end ? null : [start, end];
  }

  private async openReflection(): Promise<void> {
    try {
      const payload = await this.opts.client.reflection(this.opts.sessionId, this.index);
      this.reflectionParagraph = payload.paragraph_index;
      this.reflectionBox.innerHTML = "";
      const question = this.doc.createElement("p");
      question.className = "reflection-question";
      question.textContent = payload.text;
      this.reflectionAnswer = this.doc.createElement("textarea");
      this.reflectionAnswer.className = "reflection-answer";
      const submit = this.doc.createElement("button");
      submit.className = "submit-reflection";
      submit.textContent = "Submit answer";
      submit.addEventListener("click", () => {
        void this.submitReflection();
      });
      this.reflectionBox.appendChild(question);
      this.reflectionBox.appendChild(this.reflectionAnswer);
      this.reflectionBox.appendChild(submit);
    } catch (error) {
      this.status(this.describe(error));
    }
  }

  private async submitReflection(): Promise<void> {
    const answer = this.reflectionAnswer?.value.trim() ?? "";
    if (!answer) {
      this.status("Type an answer first.");
      return;
    }
    try {
      await this.opts.client.postAnnotation(this.opts.sessionId, {
        kind: "reflection_answer",
        paragraph_index: this.reflectionParagraph,
        payload: answer,
      });
      this.reflectionBox.innerHTML = "";
      this.reflectionAnswer = null;
      this.status("Answer recorded.");
    } catch (error) {
      this.status(this.describe(error));
    }
  }

  private async finish(): Promise<void> {
    try {
      await this.opts.tracker.finish();
      const payload = await this.opts.client.finish(this.opts.sessionId);
      this.unmount();
      this.opts.onFinished(payload);
    } catch (error) {
      this.status(this.describe(error));
    }
  }

  private render(): void {
    this.paragraphBox.innerHTML = "";
    for (const paragraph of this.opts.article.paragraphs) {
      const el = this.doc.createElement("p");
      el.dataset.paragraph = String(paragraph.index);
      el.textContent = paragraph.text;
      if (!this.paused && paragraph.index !== this.index) {
        el.classList.add("dimmed");
      }
      this.paragraphBox.appendChild(el);
    }
    this.endMarker.style.display = this.atEnd ? "block" : "none";
  }

  private button(
    parent: HTMLElement,
    className: string,
    label: string,
    onClick: () => void,
  ): HTMLButtonElement {
    const el = this.doc.createElement("button");
    el.className = className;
    el.textContent = label;
    el.addEventListener("click", onClick);
    parent.appendChild(el);
    return el;
  }

  private status(text: string): void {
    this.statusBox.textContent = text;
  }

  private describe(error: unknown): string {
    return error instanceof Error ? error.message : String(error);
  }
}
