/** A named set of exported layouts and their last ranking. */

import { ApiRequestError, type RankingRow } from "./api";
import type { LayoutDocument } from "./document";

export interface ComparisonEntry {
  name: string;
  layout: LayoutDocument;
}

export type RankFn = (
  layouts: { id: string; layout: LayoutDocument }[],
) => Promise<RankingRow[]>;

export class ComparisonSet {
  private entries: ComparisonEntry[] = [];
  ranking: RankingRow[] | null = null;
  /** Name of the entry that failed validation on the last rank attempt. */
  flaggedName: string | null = null;

  get names(): string[] {
    return this.entries.map((e) => e.name);
  }

  get size(): number {
    return this.entries.length;
  }

  add(name: string, layout: LayoutDocument): void {
    if (this.entries.some((e) => e.name === name)) {
      throw new Error(`a layout named ${JSON.stringify(name)} is already in the set`);
    }
    this.entries.push({ name, layout });
    this.ranking = null;
  }

  remove(name: string): void {
    this.entries = this.entries.filter((e) => e.name !== name);
    this.ranking = null;
    if (this.flaggedName === name) {
      this.flaggedName = null;
    }
  }

  /**
   * Rank the set (needs at least two layouts). On a per-layout validation
   * failure the offending entry is flagged and no ranking is shown.
   */
  async compare(rankFn: RankFn): Promise<RankingRow[]> {
    if (this.entries.length < 2) {
      throw new Error("add at least two layouts to compare");
    }
    this.flaggedName = null;
    try {
      const rows = await rankFn(this.entries.map((e) => ({ id: e.name, layout: e.layout })));
      this.ranking = [...rows].sort((a, b) => a.rank - b.rank);
      return this.ranking;
    } catch (error) {
      this.ranking = null;
      if (error instanceof ApiRequestError) {
        this.flaggedName =
          this.entries.map((e) => e.name).find((name) => error.message.includes(`'${name}'`)) ??
          null;
      }
      throw error;
    }
  }
}
