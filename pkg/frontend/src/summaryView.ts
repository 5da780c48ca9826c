import { GatewayClient } from "./api.js";
import { Tooltip } from "./tooltip.js";
import type { ExplanationPayload, FinishPayload, ImpactLevel, SummaryPayload } from "./types.js";

export interface SummaryViewOptions {
  root: HTMLElement;
  client: GatewayClient;
  sessionId: string;
  articleId: string;
  tooltip: Tooltip;
}

const IMPACT_LEVELS: ImpactLevel[] = ["none", "low", "high"];

/**
 * Post-reading view. Shows the generated summary, three impact controls,
 * and an explanation-on-hover toggle. The toggle starts checked so the
 * feature is discoverable; hovering with it off sends no request at all.
 */
export class SummaryView {
  readonly dwellSelect: HTMLSelectElement;
  readonly highlightSelect: HTMLSelectElement;
  readonly noteSelect: HTMLSelectElement;
  readonly explainToggle: HTMLInputElement;
  private readonly doc: Document;
  private readonly sentenceBox: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly sourceLine: HTMLElement;
  private sentences: string[] = [];
  private explanationCache = new Map<number, ExplanationPayload>();

  constructor(private readonly opts: SummaryViewOptions) {
    this.doc = opts.root.ownerDocument;
    opts.root.innerHTML = "";

    const controls = this.doc.createElement("div");
    controls.className = "impact-controls";
    this.dwellSelect = this.impactSelect(controls, "dwell-impact", "Reading time");
    this.highlightSelect = this.impactSelect(controls, "highlight-impact", "Highlights");
    this.noteSelect = this.impactSelect(controls, "note-impact", "Notes");

    const regenerate = this.doc.createElement("button");
    regenerate.className = "regenerate";
    regenerate.textContent = "Regenerate summary";
    regenerate.addEventListener("click", () => {
      void this.regenerate();
    });
    controls.appendChild(regenerate);

    const pastButton = this.doc.createElement("button");
    pastButton.className = "past-summary";
    pastButton.textContent = "Past Summary";
    pastButton.addEventListener("click", () => {
      void this.loadPastSummary();
    });
    controls.appendChild(pastButton);

    const toggleLabel = this.doc.createElement("label");
    toggleLabel.className = "explain-toggle-label";
    this.explainToggle = this.doc.createElement("input");
    this.explainToggle.type = "checkbox";
    this.explainToggle.className = "explain-toggle";
    this.explainToggle.checked = true;
    toggleLabel.appendChild(this.explainToggle);
    toggleLabel.appendChild(this.doc.createTextNode(" hover to see explanation"));
    controls.appendChild(toggleLabel);

    this.banner = this.doc.createElement("div");
    this.banner.className = "error-banner";
    this.banner.style.display = "none";

    this.sourceLine = this.doc.createElement("div");
    this.sourceLine.className = "summary-source";

    this.sentenceBox = this.doc.createElement("div");
    this.sentenceBox.className = "summary-sentences";

    opts.root.appendChild(controls);
    opts.root.appendChild(this.banner);
    opts.root.appendChild(this.sourceLine);
    opts.root.appendChild(this.sentenceBox);
  }

  /** Render the summary returned by finishing the session. */
  showInitial(payload: FinishPayload): void {
    // a session that never used focus mode has no dwell data to weight by
    this.dwellSelect.disabled = !payload.dwell_control_enabled;
    this.renderSummary(payload, "current session");
  }

  get sentenceElements(): HTMLElement[] {
    return Array.from(this.sentenceBox.querySelectorAll<HTMLElement>(".summary-sentence"));
  }

  async regenerate(): Promise<void> {
    try {
      const payload = await this.opts.client.summary(this.opts.sessionId, {
        dwell_impact: this.dwellSelect.value as ImpactLevel,
        highlight_impact: this.highlightSelect.value as ImpactLevel,
        note_impact: this.noteSelect.value as ImpactLevel,
      });
      this.renderSummary(payload, "current session");
    } catch (error) {
      // keep whatever summary is on screen; only the banner changes
      this.banner.textContent =
        error instanceof Error ? error.message : "summary request failed";
      this.banner.style.display = "block";
    }
  }

  async loadPastSummary(): Promise<void> {
    try {
      const payload = await this.opts.client.pastSummary(this.opts.articleId);
      this.renderSummary(payload.summary, "stored from an earlier session");
    } catch (error) {
      this.banner.textContent =
        error instanceof Error ? error.message : "no stored summary";
      this.banner.style.display = "block";
    }
  }

  private renderSummary(
    payload: Pick<SummaryPayload, "sentences" | "backend">,
    source: string,
  ): void {
    this.sentences = payload.sentences;
    this.explanationCache = new Map();
    this.banner.style.display = "none";
    this.banner.textContent = "";
    this.sourceLine.textContent = `${source} (${payload.backend})`;
    this.sentenceBox.innerHTML = "";
    this.sentences.forEach((sentence, index) => {
      const span = this.doc.createElement("span");
      span.className = "summary-sentence";
      span.dataset.index = String(index);
      span.textContent = index === 0 ? sentence : ` ${sentence}`;
      span.addEventListener("mouseenter", (event) => {
        void this.onHover(index, event);
      });
      span.addEventListener("mouseleave", () => this.opts.tooltip.hide());
      this.sentenceBox.appendChild(span);
    });
  }

  private async onHover(index: number, event: MouseEvent): Promise<void> {
    if (!this.explainToggle.checked) {
      return;
    }
    try {
      let explanation = this.explanationCache.get(index);
      if (explanation === undefined) {
        explanation = await this.opts.client.explanation(this.opts.sessionId, index);
        this.explanationCache.set(index, explanation);
      }
      this.opts.tooltip.show(explanation.message, event.clientX, event.clientY);
    } catch {
      this.opts.tooltip.hide();
    }
  }

  private impactSelect(
    parent: HTMLElement,
    className: string,
    label: string,
  ): HTMLSelectElement {
    const wrap = this.doc.createElement("label");
    wrap.appendChild(this.doc.createTextNode(`${label} `));
    const select = this.doc.createElement("select");
    select.className = className;
    for (const level of IMPACT_LEVELS) {
      const option = this.doc.createElement("option");
      option.value = level;
      option.textContent = level;
      if (level === "low") {
        option.selected = true;
      }
      select.appendChild(option);
    }
    wrap.appendChild(select);
    parent.appendChild(wrap);
    return select;
  }
}
