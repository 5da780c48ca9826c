import type { FetchLike } from "../src/api.js";
import type { ArticlePayload } from "../src/types.js";

export interface RecordedCall {
  method: string;
  url: string;
  body: unknown;
}

export type RouteHandler = (
  method: string,
  url: string,
  body: unknown,
) => { status?: number; payload: unknown } | undefined;

/** Fetch stand-in that records every call and answers from the handler. */
export function stubFetch(handler: RouteHandler): { fetchFn: FetchLike; calls: RecordedCall[] } {
  const calls: RecordedCall[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    const method = init?.method ?? "GET";
    const body = init?.body !== undefined ? JSON.parse(String(init.body)) : undefined;
    calls.push({ method, url, body });
    const result = handler(method, url, body);
    if (result === undefined) {
      throw new Error(`unhandled request: ${method} ${url}`);
    }
    const status = result.status ?? 200;
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => result.payload,
    } as unknown as Response;
  };
  return { fetchFn, calls };
}

export function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

/** Let queued promise callbacks (and zero-delay timers) run. */
export function settle(): Promise<void> {
  return sleep(0);
}

export const ARTICLE: ArticlePayload = {
  schema_version: 1,
  article_id: "art1",
  title: "",
  source_url: "",
  total_words: 15,
  estimated_seconds: 120,
  paragraphs: [
    {
      index: 0,
      text: "Glaciers carve valleys. Glaciers carve moraines.",
      word_count: 6,
      sentences: [
        { index: 0, start: 0, end: 23, word_count: 3 },
        { index: 1, start: 24, end: 48, word_count: 3 },
      ],
    },
    {
      index: 1,
      text: "Bakers knead dough. Bakers proof loaves.",
      word_count: 6,
      sentences: [
        { index: 2, start: 0, end: 19, word_count: 3 },
        { index: 3, start: 20, end: 40, word_count: 3 },
      ],
    },
    {
      index: 2,
      text: "Sailors mend canvas sails.",
      word_count: 4,
      sentences: [{ index: 4, start: 0, end: 26, word_count: 4 }],
    },
  ],
};
