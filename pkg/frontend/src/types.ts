// Payload shapes mirrored from the gateway. The UI never recomputes any
// of these numbers; it only renders what the service sends back.

export interface SentenceSpan {
  index: number;
  start: number;
  end: number;
  word_count: number;
}

export interface ParagraphPayload {
  index: number;
  text: string;
  word_count: number;
  sentences: SentenceSpan[];
}

export interface ArticlePayload {
  schema_version: number;
  article_id: string;
  title: string;
  source_url: string;
  total_words: number;
  estimated_seconds: number;
  paragraphs: ParagraphPayload[];
}

export interface TimeFilterPayload {
  schema_version: number;
  budget: {
    estimated_total_seconds: number;
    user_budget_seconds: number;
    rate: number;
  };
  selected_sentence_ids: number[];
  estimated_selected_seconds: number;
  highlights: { paragraph: number; start: number; end: number }[];
}

export interface QuestionPayload {
  question_id: string;
  text: string;
  answer_unit: number;
}

export interface QuestionsPayload {
  schema_version: number;
  backend: string;
  questions: QuestionPayload[];
}

export interface QuestionFilterPayload {
  schema_version: number;
  highlights: { sentence_id: number; question_id: string }[];
  tooltips: Record<string, string>;
}

export interface AnnotationPayload {
  annotation_id: string;
  kind: string;
  paragraph_index: number;
  payload: string;
  span: [number, number] | null;
}

export interface SessionPayload {
  schema_version: number;
  session_id: string;
  article_id: string;
  paragraph_count: number;
  started_at: number;
  dwell: Record<string, number>;
  annotations: AnnotationPayload[];
  focus_mode_used: boolean;
  finished: boolean;
}

export interface ReflectionPayload {
  schema_version: number;
  question_id: string;
  text: string;
  paragraph_index: number;
}

export type ImpactLevel = "none" | "low" | "high";

export interface ImpactControls {
  dwell_impact: ImpactLevel;
  highlight_impact: ImpactLevel;
  note_impact: ImpactLevel;
}

export interface SummaryPayload {
  schema_version: number;
  backend: string;
  word_budget: number;
  fell_back: boolean;
  sentences: string[];
  controls?: ImpactControls;
}

export interface FinishPayload extends SummaryPayload {
  dwell_control_enabled: boolean;
}

export interface ExplanationPayload {
  schema_version: number;
  summary_sentence_index: number;
  source_kind: string;
  source_ref: string | number;
  anchor_paragraph: number;
  message: string;
  percentile: number | null;
}

export interface PastSummaryPayload {
  schema_version: number;
  article_id: string;
  session: Record<string, unknown>;
  summary: {
    backend: string;
    word_budget: number;
    fell_back: boolean;
    sentences: string[];
  };
}
