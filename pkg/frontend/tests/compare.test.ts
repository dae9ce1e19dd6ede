import { describe, expect, it } from "vitest";

import { ApiRequestError, type RankingRow } from "../src/api";
import { ComparisonSet } from "../src/compare";
import type { LayoutDocument } from "../src/document";

function layout(x: number): LayoutDocument {
  return {
    version: 1,
    frame: { width: 100, height: 100 },
    objects: [{ id: "o1", x, y: 40, width: 20, height: 20, kind: "other" }],
  };
}

describe("ComparisonSet", () => {
  it("rejects duplicate names", () => {
    const set = new ComparisonSet();
    set.add("a", layout(10));
    expect(() => set.add("a", layout(20))).toThrow(/already in the set/);
  });

  it("needs at least two layouts", async () => {
    const set = new ComparisonSet();
    set.add("only", layout(40));
    await expect(set.compare(async () => [])).rejects.toThrow(/at least two/);
  });

  it("stores the ranking sorted by rank, ties sharing a rank", async () => {
    const set = new ComparisonSet();
    set.add("a", layout(40));
    set.add("b", layout(40));
    set.add("c", layout(0));
    const rows: RankingRow[] = [
      { id: "c", aesthetic_value: 0.5, rank: 3 },
      { id: "a", aesthetic_value: 1.0, rank: 1 },
      { id: "b", aesthetic_value: 1.0, rank: 1 },
    ];
    const ranking = await set.compare(async () => rows);
    expect(ranking.map((r) => r.rank)).toEqual([1, 1, 3]);
  });

  it("flags the offending entry on validation failure and clears the ranking", async () => {
    const set = new ComparisonSet();
    set.add("good", layout(10));
    set.add("broken", layout(20));
    const failure = new ApiRequestError(400, {
      error: "validation",
      message: "layout 'broken': object 'o1' extends outside the frame",
    });
    await expect(
      set.compare(async () => {
        throw failure;
      }),
    ).rejects.toBe(failure);
    expect(set.flaggedName).toBe("broken");
    expect(set.ranking).toBeNull();
  });
});
