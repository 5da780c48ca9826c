import { GatewayClient } from "./api.js";
import { FocusTracker } from "./focusTracker.js";
import { FocusView } from "./focusView.js";
import { PlanView } from "./planView.js";
import { SummaryView } from "./summaryView.js";
import { Tooltip } from "./tooltip.js";
import type { ArticlePayload, FinishPayload } from "./types.js";

export type Mode = "plan" | "focus" | "summary";

/** Owns the mode transitions; each view owns its own DOM subtree. */
export class App {
  mode: Mode = "plan";
  planView: PlanView | null = null;
  focusView: FocusView | null = null;
  summaryView: SummaryView | null = null;
  tracker: FocusTracker | null = null;
  private article: ArticlePayload | null = null;
  private sessionId = "";
  private readonly tooltip: Tooltip;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: GatewayClient,
  ) {
    this.tooltip = new Tooltip(root.ownerDocument);
  }

  async loadArticle(body: string, contentKind = "plain", sourceUrl = ""): Promise<void> {
    this.article = await this.client.ingest(body, contentKind, sourceUrl);
    this.mode = "plan";
    this.planView = new PlanView({
      root: this.root,
      article: this.article,
      client: this.client,
      tooltip: this.tooltip,
      onStartReading: () => {
        void this.startReading();
      },
    });
    await this.planView.init();
  }

  async startReading(): Promise<void> {
    if (this.article === null) {
      return;
    }
    const session = await this.client.createSession(this.article.article_id);
    this.sessionId = session.session_id;
    this.tracker = new FocusTracker((interval) =>
      this.client.postFocus(this.sessionId, interval),
    );
    this.mode = "focus";
    this.focusView = new FocusView({
      root: this.root,
      article: this.article,
      client: this.client,
      sessionId: this.sessionId,
      tracker: this.tracker,
      onFinished: (payload) => this.showSummary(payload),
    });
    this.focusView.mount();
  }

  showSummary(payload: FinishPayload): void {
    if (this.article === null) {
      return;
    }
    this.mode = "summary";
    this.summaryView = new SummaryView({
      root: this.root,
      client: this.client,
      sessionId: this.sessionId,
      articleId: this.article.article_id,
      tooltip: this.tooltip,
    });
    this.summaryView.showInitial(payload);
  }
}
