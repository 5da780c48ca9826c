import type {
  ArticlePayload,
  ExplanationPayload,
  FinishPayload,
  ImpactControls,
  PastSummaryPayload,
  QuestionFilterPayload,
  QuestionsPayload,
  ReflectionPayload,
  SessionPayload,
  SummaryPayload,
  TimeFilterPayload,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Error envelope from the gateway, surfaced with its machine code. */
export class GatewayError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "GatewayError";
  }
}

export interface FocusInterval {
  paragraph_index: number;
  enter_ts: number;
  leave_ts: number;
}

export interface AnnotationRequest {
  kind: "note" | "highlight" | "reflection_answer";
  paragraph_index: number;
  payload?: string;
  span?: [number, number];
}

/**
 * Thin typed client for the reading gateway. One method per route; no
 * caching or retry logic here (the focus tracker owns its own queue).
 */
export class GatewayClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  ingest(body: string, contentKind = "plain", sourceUrl = ""): Promise<ArticlePayload> {
    return this.request("POST", "/articles", {
      body,
      content_kind: contentKind,
      source_url: sourceUrl,
    });
  }

  article(articleId: string): Promise<ArticlePayload> {
    return this.request("GET", `/articles/${articleId}`);
  }

  timeFilter(articleId: string, budgetSeconds: number): Promise<TimeFilterPayload> {
    const query = encodeURIComponent(String(budgetSeconds));
    return this.request("GET", `/articles/${articleId}/time-filter?budget_seconds=${query}`);
  }

  questions(articleId: string): Promise<QuestionsPayload> {
    return this.request("GET", `/articles/${articleId}/questions`);
  }

  questionFilter(articleId: string, questionIds: string[]): Promise<QuestionFilterPayload> {
    return this.request("POST", `/articles/${articleId}/question-filter`, {
      question_ids: questionIds,
    });
  }

  pastSummary(articleId: string): Promise<PastSummaryPayload> {
    return this.request("GET", `/articles/${articleId}/past-summary`);
  }

  createSession(articleId: string): Promise<SessionPayload> {
    return this.request("POST", "/sessions", { article_id: articleId });
  }

  postFocus(sessionId: string, interval: FocusInterval): Promise<unknown> {
    return this.request("POST", `/sessions/${sessionId}/focus`, interval);
  }

  postAnnotation(sessionId: string, annotation: AnnotationRequest): Promise<unknown> {
    return this.request("POST", `/sessions/${sessionId}/annotations`, annotation);
  }

  reflection(sessionId: string, paragraphIndex: number): Promise<ReflectionPayload> {
    return this.request(
      "GET",
      `/sessions/${sessionId}/reflection?paragraph_index=${paragraphIndex}`,
    );
  }

  finish(sessionId: string): Promise<FinishPayload> {
    return this.request("POST", `/sessions/${sessionId}/finish`);
  }

  summary(sessionId: string, controls: Partial<ImpactControls>): Promise<SummaryPayload> {
    return this.request("POST", `/sessions/${sessionId}/summary`, controls);
  }

  explanation(sessionId: string, sentenceIndex: number): Promise<ExplanationPayload> {
    return this.request("GET", `/sessions/${sessionId}/explanations/${sentenceIndex}`);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      const error = (payload as { error?: { code?: string; message?: string } } | null)?.error;
      throw new GatewayError(
        error?.code ?? "http_error",
        error?.message ?? `request failed with status ${response.status}`,
        response.status,
      );
    }
    return payload as T;
  }
}
