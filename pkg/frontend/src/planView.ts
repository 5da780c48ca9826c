import { GatewayClient } from "./api.js";
import { Tooltip } from "./tooltip.js";
import type { ArticlePayload, QuestionPayload } from "./types.js";

export interface PlanViewOptions {
  root: HTMLElement;
  article: ArticlePayload;
  client: GatewayClient;
  tooltip: Tooltip;
  onStartReading: () => void;
}

export const DEFAULT_BUDGET_PERCENT = 50;

/**
 * Pre-reading view: a time slider and a question checklist over the full
 * article text. Selected-sentence highlights come straight from the
 * gateway; hovering a question highlight shows the question that owns it.
 */
export class PlanView {
  readonly slider: HTMLInputElement;
  private readonly budgetLabel: HTMLSpanElement;
  private readonly checklist: HTMLElement;
  private readonly textBox: HTMLElement;
  private readonly errorBox: HTMLElement;
  private readonly sentenceEls = new Map<number, HTMLElement>();
  private questionBySentence = new Map<number, string>();
  private questions: QuestionPayload[] = [];

  constructor(private readonly opts: PlanViewOptions) {
    const doc = opts.root.ownerDocument;
    opts.root.innerHTML = "";

    const controls = doc.createElement("div");
    controls.className = "plan-controls";

    this.slider = doc.createElement("input");
    this.slider.type = "range";
    this.slider.min = "1";
    this.slider.max = "100";
    this.slider.value = String(DEFAULT_BUDGET_PERCENT);
    this.slider.id = "time-budget";
    this.budgetLabel = doc.createElement("span");
    this.budgetLabel.className = "budget-label";
    this.slider.addEventListener("input", () => this.updateBudgetLabel());
    this.slider.addEventListener("change", () => {
      void this.refreshTimeFilter();
    });
    controls.appendChild(this.slider);
    controls.appendChild(this.budgetLabel);

    this.checklist = doc.createElement("div");
    this.checklist.className = "question-checklist";

    const start = doc.createElement("button");
    start.className = "start-reading";
    start.textContent = "Start reading";
    start.addEventListener("click", () => opts.onStartReading());

    this.errorBox = doc.createElement("div");
    this.errorBox.className = "inline-error";

    this.textBox = doc.createElement("article");
    this.textBox.className = "article-text";

    opts.root.appendChild(controls);
    opts.root.appendChild(this.checklist);
    opts.root.appendChild(start);
    opts.root.appendChild(this.errorBox);
    opts.root.appendChild(this.textBox);

    this.renderArticle();
    this.updateBudgetLabel();
  }

  /** Budget in seconds implied by the slider position. */
  get budgetSeconds(): number {
    return (this.opts.article.estimated_seconds * Number(this.slider.value)) / 100;
  }

  async init(): Promise<void> {
    try {
      const payload = await this.opts.client.questions(this.opts.article.article_id);
      this.questions = payload.questions;
      this.renderChecklist();
    } catch (error) {
      this.showError(error);
    }
    await this.refreshTimeFilter();
  }

  sentenceElement(sentenceId: number): HTMLElement | undefined {
    return this.sentenceEls.get(sentenceId);
  }

  private renderArticle(): void {
    const doc = this.opts.root.ownerDocument;
    this.textBox.innerHTML = "";
    for (const paragraph of this.opts.article.paragraphs) {
      const p = doc.createElement("p");
      p.dataset.paragraph = String(paragraph.index);
      let cursor = 0;
      for (const sentence of paragraph.sentences) {
        if (sentence.start > cursor) {
          p.appendChild(doc.createTextNode(paragraph.text.slice(cursor, sentence.start)));
        }
        const span = doc.createElement("span");
        span.dataset.sentence = String(sentence.index);
        span.textContent = paragraph.text.slice(sentence.start, sentence.end);
        span.addEventListener("mouseenter", (event) => this.onSentenceHover(sentence.index, event));
        span.addEventListener("mouseleave", () => this.opts.tooltip.hide());
        p.appendChild(span);
        this.sentenceEls.set(sentence.index, span);
        cursor = sentence.end;
      }
      if (cursor < paragraph.text.length) {
        p.appendChild(doc.createTextNode(paragraph.text.slice(cursor)));
      }
      this.textBox.appendChild(p);
    }
  }

  private renderChecklist(): void {
    const doc = this.opts.root.ownerDocument;
    this.checklist.innerHTML = "";
    for (const question of this.questions) {
      const label = doc.createElement("label");
      const box = doc.createElement("input");
      box.type = "checkbox";
      box.value = question.question_id;
      // no questions are selected up front; highlights appear on demand
      box.checked = false;
      box.addEventListener("change", () => {
        void this.refreshQuestionFilter();
      });
      label.appendChild(box);
      label.appendChild(doc.createTextNode(` ${question.text}`));
      this.checklist.appendChild(label);
    }
  }

  private selectedQuestionIds(): string[] {
    const boxes = this.checklist.querySelectorAll<HTMLInputElement>("input[type=checkbox]");
    return Array.from(boxes)
      .filter((box) => box.checked)
      .map((box) => box.value);
  }

  private async refreshTimeFilter(): Promise<void> {
    try {
      const payload = await this.opts.client.timeFilter(
        this.opts.article.article_id,
        this.budgetSeconds,
      );
      for (const el of this.sentenceEls.values()) {
        el.classList.remove("time-hit");
      }
      for (const id of payload.selected_sentence_ids) {
        this.sentenceEls.get(id)?.classList.add("time-hit");
      }
      this.errorBox.textContent = "";
    } catch (error) {
      this.showError(error);
    }
  }

  private async refreshQuestionFilter(): Promise<void> {
    for (const el of this.sentenceEls.values()) {
      el.classList.remove("question-hit");
    }
    this.questionBySentence = new Map();
    const ids = this.selectedQuestionIds();
    if (ids.length === 0) {
      return;
    }
    try {
      const payload = await this.opts.client.questionFilter(this.opts.article.article_id, ids);
      for (const hit of payload.highlights) {
        this.sentenceEls.get(hit.sentence_id)?.classList.add("question-hit");
      }
      for (const [sentenceId, question] of Object.entries(payload.tooltips)) {
        this.questionBySentence.set(Number(sentenceId), question);
      }
      this.errorBox.textContent = "";
    } catch (error) {
      this.showError(error);
    }
  }

  private onSentenceHover(sentenceId: number, event: MouseEvent): void {
    const question = this.questionBySentence.get(sentenceId);
    if (question === undefined) {
      return;
    }
    this.opts.tooltip.show(question, event.clientX, event.clientY);
  }

  private updateBudgetLabel(): void {
    const total = this.opts.article.estimated_seconds;
    this.budgetLabel.textContent = `${this.budgetSeconds.toFixed(1)} s of ${total.toFixed(1)} s`;
  }

  private showError(error: unknown): void {
    this.errorBox.textContent = error instanceof Error ? error.message : String(error);
  }
}
