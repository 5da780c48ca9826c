import type { FocusInterval } from "./api.js";

export type IntervalSink = (interval: FocusInterval) => Promise<unknown>;
export type Clock = () => number;

const epochSeconds: Clock = () => Date.now() / 1000;

/**
 * Accumulates focus-mode dwell as enter/leave intervals and posts them
 * through the sink. Guarantees, by construction:
 *
 * - intervals are monotone and never overlap (an enter is clamped to the
 *   previous leave timestamp);
 * - pausing closes the open interval so no time accrues until resume;
 * - failed posts stay queued and are flushed in order on the next
 *   opportunity, so an offline stretch loses nothing.
 */
export class FocusTracker {
  private open: { paragraph: number; enteredAt: number } | null = null;
  private queue: FocusInterval[] = [];
  private flushing = false;
  private lastLeave = 0;

  constructor(
    private readonly sink: IntervalSink,
    private readonly now: Clock = epochSeconds,
  ) {}

  /** Begin dwelling on a paragraph, closing any open interval first. */
  enter(paragraph: number): void {
    const ts = this.now();
    if (this.open !== null) {
      this.close(ts);
    }
    this.open = { paragraph, enteredAt: ts };
  }

  /** Close the open interval without starting a new one. */
  leave(): void {
    if (this.open !== null) {
      this.close(this.now());
    }
  }

  get openParagraph(): number | null {
    return this.open?.paragraph ?? null;
  }

  get pendingCount(): number {
    return this.queue.length;
  }

  /** Close out and push everything that is still queued. */
  async finish(): Promise<void> {
    this.leave();
    await this.flush();
  }

  async flush(): Promise<void> {
    if (this.flushing) {
      return;
    }
    this.flushing = true;
    try {
      while (this.queue.length > 0) {
        try {
          await this.sink(this.queue[0]);
        } catch {
          break; // stays queued; retried on the next flush
        }
        this.queue.shift();
      }
    } finally {
      this.flushing = false;
    }
  }

  private close(ts: number): void {
    if (this.open === null) {
      return;
    }
    const enter = Math.max(this.open.enteredAt, this.lastLeave);
    const leave = Math.max(ts, enter);
    this.queue.push({
      paragraph_index: this.open.paragraph,
      enter_ts: enter,
      leave_ts: leave,
    });
    this.lastLeave = leave;
    this.open = null;
    void this.flush();
  }
}
