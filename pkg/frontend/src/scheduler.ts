/**
 * Debounced live scoring with latest-wins semantics.
 *
 * Contract: a request fires 250 ms after the last edit, at most one request
 * is in flight at a time, and only the response matching the newest
 * scheduled state is ever delivered. A burst of edits therefore yields
 * exactly one displayed score: the terminal state's.
 */

import type { ReportDocument } from "./api";

export interface ScorerHandlers {
  onUpdate: (report: ReportDocument, payload: string) => void;
  onError: (error: unknown) => void;
}

export class LiveScorer {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private latest: string | null = null;
  private version = 0;
  private inFlight = false;

  constructor(
    private readonly send: (payload: string) => Promise<ReportDocument>,
    private readonly handlers: ScorerHandlers,
    readonly debounceMs = 250,
  ) {}

  /** Register the newest state; (re)starts the debounce window. */
  schedule(payload: string): void {
    this.latest = payload;
    this.version += 1;
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire();
    }, this.debounceMs);
  }

  /** Explicit recompute: skip the debounce window. */
  flush(): Promise<void> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    return this.fire();
  }

  private async fire(): Promise<void> {
    if (this.inFlight || this.latest === null) {
      return; // an in-flight completion re-fires if a newer state is waiting
    }
    const payload = this.latest;
    const version = this.version;
    this.inFlight = true;
    try {
      const report = await this.send(payload);
      if (version === this.version) {
        this.handlers.onUpdate(report, payload);
      }
    } catch (error) {
      if (version === this.version) {
        this.handlers.onError(error);
      }
    } finally {
      this.inFlight = false;
      if (this.version !== version && this.timer === null) {
        void this.fire();
      }
    }
  }
}
