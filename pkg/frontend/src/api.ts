/** Thin fetch wrappers around the scoring service. Scores are computed
 * server-side only; this client never reimplements the measures. */

import type { LayoutDocument } from "./document";

export interface ReportDocument {
  balance: number;
  equilibrium: number;
  symmetry: number;
  sequence: number;
  rhythm: number;
  aesthetic_value: number;
  intermediates?: Record<string, unknown>;
  detail?: { object_count: number; objects: Record<string, number | string>[] };
}

export interface RankingRow {
  id: string;
  aesthetic_value: number;
  rank: number;
}

export interface ApiErrorBody {
  error: string;
  message: string;
  field?: string;
}

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(body.message);
    this.name = "ApiRequestError";
  }
}

async function post<T>(url: string, payload: string): Promise<T> {
  const response = await fetch(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: payload,
  });
  if (!response.ok) {
    let body: ApiErrorBody;
    try {
      body = (await response.json()) as ApiErrorBody;
    } catch {
      body = { error: "internal", message: `unexpected response ${response.status}` };
    }
    throw new ApiRequestError(response.status, body);
  }
  return (await response.json()) as T;
}

export async function measureLayout(
  base: string,
  payload: string,
  detail = false,
): Promise<ReportDocument> {
  const query = detail ? "?detail=true" : "";
  return post<ReportDocument>(`${base}/api/measure${query}`, payload);
}

export async function rankLayouts(
  base: string,
  layouts: { id: string; layout: LayoutDocument }[],
): Promise<RankingRow[]> {
  const result = await post<{ ranking: RankingRow[] }>(
    `${base}/api/rank`,
    JSON.stringify({ layouts }),
  );
  return result.ranking;
}
