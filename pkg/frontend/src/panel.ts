/** Score panel formatting and rendering. */

import type { ReportDocument } from "./api";
import { round4 } from "./round";

export const SCORE_LABELS: readonly [string, keyof ReportDocument][] = [
  ["Balance", "balance"],
  ["Equilibrium", "equilibrium"],
  ["Symmetry", "symmetry"],
  ["Sequence", "sequence"],
  ["Rhythm", "rhythm"],
  ["Aesthetic value (av)", "aesthetic_value"],
];

/** The six panel lines, formatted exactly like the CLI text report. */
export function formatScoreLines(report: ReportDocument): string[] {
  return SCORE_LABELS.map(([label, key]) => `${label} ${round4(report[key] as number)}`);
}

export interface PanelState {
  report: ReportDocument | null;
  objectCount: number;
  stale: boolean;
}

export function renderPanel(root: HTMLElement, state: PanelState): void {
  root.replaceChildren();
  if (state.report === null) {
    const hint = document.createElement("p");
    hint.className = "panel-hint";
    hint.textContent =
      state.objectCount === 0 ? "annotate at least one object" : "scoring...";
    root.append(hint);
    return;
  }
  if (state.stale) {
    const badge = document.createElement("p");
    badge.className = "stale-badge";
    badge.textContent = "offline: showing last computed scores";
    root.append(badge);
  }
  const list = document.createElement("dl");
  for (const line of formatScoreLines(state.report)) {
    const split = line.lastIndexOf(" ");
    const term = document.createElement("dt");
    term.textContent = line.slice(0, split);
    const value = document.createElement("dd");
    value.textContent = line.slice(split + 1);
    list.append(term, value);
  }
  const term = document.createElement("dt");
  term.textContent = "Objects";
  const value = document.createElement("dd");
  value.textContent = String(state.objectCount);
  list.append(term, value);
  root.append(list);
}
