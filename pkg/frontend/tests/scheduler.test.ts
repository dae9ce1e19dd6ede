import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import type { ReportDocument } from "../src/api";
import { LiveScorer } from "../src/scheduler";

function reportFor(payload: string): ReportDocument {
  const value = payload.length / 1000;
  return {
    balance: value,
    equilibrium: value,
    symmetry: value,
    sequence: value,
    rhythm: value,
    aesthetic_value: value,
  };
}

describe("LiveScorer", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("debounces: a 10-edit burst sends one request and displays the final state", async () => {
    const sent: string[] = [];
    const displayed: string[] = [];
    const scorer = new LiveScorer(
      async (payload) => {
        sent.push(payload);
        return reportFor(payload);
      },
      {
        onUpdate: (_report, payload) => displayed.push(payload),
        onError: () => {
          throw new Error("unexpected error");
        },
      },
    );
    for (let edit = 1; edit <= 10; edit++) {
      scorer.schedule(`state-${edit}`);
      await vi.advanceTimersByTimeAsync(20); // bursts are faster than the debounce
    }
    await vi.advanceTimersByTimeAsync(1000);
    expect(sent).toEqual(["state-10"]);
    expect(displayed).toEqual(["state-10"]);
  });

  it("waits the debounce window before sending", async () => {
    const sent: string[] = [];
    const scorer = new LiveScorer(
      async (payload) => {
        sent.push(payload);
        return reportFor(payload);
      },
      { onUpdate: () => {}, onError: () => {} },
    );
    scorer.schedule("a");
    await vi.advanceTimersByTimeAsync(249);
    expect(sent).toEqual([]);
    await vi.advanceTimersByTimeAsync(1);
    expect(sent).toEqual(["a"]);
  });

  it("keeps at most one request in flight and replays the newest state", async () => {
    const sent: string[] = [];
    const displayed: string[] = [];
    let release: (() => void) | null = null;
    const scorer = new LiveScorer(
      (payload) =>
        new Promise((resolve) => {
          sent.push(payload);
          release = () => resolve(reportFor(payload));
        }),
      { onUpdate: (_r, payload) => displayed.push(payload), onError: () => {} },
    );
    scorer.schedule("first");
    await vi.advanceTimersByTimeAsync(250);
    expect(sent).toEqual(["first"]); // now in flight
    scorer.schedule("second");
    await vi.advanceTimersByTimeAsync(250);
    expect(sent).toEqual(["first"]); // still only one request
    const releaseFirst = release!;
    releaseFirst();
    await vi.advanceTimersByTimeAsync(0);
    expect(sent).toEqual(["first", "second"]);
    const releaseSecond = release!;
    releaseSecond();
    await vi.advanceTimersByTimeAsync(0);
    // the stale "first" response was never displayed
    expect(displayed).toEqual(["second"]);
  });

  it("reports errors only for the newest state", async () => {
    const errors: unknown[] = [];
    const displayed: string[] = [];
    const scorer = new LiveScorer(
      async (payload) => {
        if (payload === "bad") {
          throw new Error("network down");
        }
        return reportFor(payload);
      },
      { onUpdate: (_r, payload) => displayed.push(payload), onError: (e) => errors.push(e) },
    );
    scorer.schedule("bad");
    await vi.advanceTimersByTimeAsync(250);
    expect(errors).toHaveLength(1);
    scorer.schedule("good");
    await vi.advanceTimersByTimeAsync(250);
    expect(displayed).toEqual(["good"]);
    expect(errors).toHaveLength(1);
  });

  it("flush skips the debounce window", async () => {
    const sent: string[] = [];
    const scorer = new LiveScorer(
      async (payload) => {
        sent.push(payload);
        return reportFor(payload);
      },
      { onUpdate: () => {}, onError: () => {} },
    );
    scorer.schedule("now");
    await scorer.flush();
    expect(sent).toEqual(["now"]);
  });
});
