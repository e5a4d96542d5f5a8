// Typed fetch wrappers for the ranking service. All ranking math happens
// server-side; this module only moves JSON.

export type MethodChoice = "topsis" | "wp" | "both";
export type Orientation = "benefit" | "cost";

export type TermDoc = {
  code: string;
  label: string;
  a: number;
  b: number;
  c: number;
};

export type ScaleDoc = {
  name: string;
  terms: TermDoc[];
};

export type CriterionDoc = {
  id: string;
  description: string;
  kind: "crisp" | "linguistic";
  scale?: string;
  orientation: Orientation;
  weight_term: string;
};

export type SchemeDoc = {
  name: string;
  scales: ScaleDoc[];
  criteria: CriterionDoc[];
  aliases?: Record<string, Record<string, string>>;
  eligibility?: { criterion: string; op: string; value: number }[];
};

export type ResultEntry = {
  id: string;
  v: number;
  rank: number;
  d_pos?: number;
  d_neg?: number;
  s?: number;
};

export type ResultDoc = {
  method: "topsis" | "wp";
  scheme: string;
  results: ResultEntry[];
  excluded: string[];
};

/** Single-method responses are one document; "both" nests one per method. */
export type RankResponse = ResultDoc | { topsis: ResultDoc; wp: ResultDoc };

export function isBothResponse(
  r: RankResponse
): r is { topsis: ResultDoc; wp: ResultDoc } {
  return !("method" in r);
}

export type Override = {
  weight?: number;
  weight_term?: string;
  orientation?: Orientation;
};

export type RankBody = {
  scheme: string;
  dataset: string;
  method: MethodChoice;
};

export type WhatIfBody = RankBody & {
  overrides: Record<string, Override>;
};

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (typeof body.detail === "string") return body.detail;
    if (Array.isArray(body.issues)) return body.issues.join("; ");
    if (body.detail !== undefined) return JSON.stringify(body.detail);
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return `request failed with status ${response.status}`;
}

async function decode<T>(response: Response): Promise<T> {
  if (!response.ok) {
    throw new ApiError(response.status, await errorMessage(response));
  }
  return (await response.json()) as T;
}

export class Client {
  constructor(private readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl + path;
  }

  private async post<T>(
    path: string,
    body: unknown,
    signal?: AbortSignal
  ): Promise<T> {
    const response = await fetch(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    return decode<T>(response);
  }

  async getSchemes(): Promise<string[]> {
    const response = await fetch(this.url("/schemes"));
    const body = await decode<{ schemes: string[] }>(response);
    return body.schemes;
  }

  async getScheme(name: string): Promise<SchemeDoc> {
    const response = await fetch(this.url(`/schemes/${encodeURIComponent(name)}`));
    return decode<SchemeDoc>(response);
  }

  async rank(body: RankBody, signal?: AbortSignal): Promise<RankResponse> {
    return this.post<RankResponse>("/rank", body, signal);
  }

  async whatIf(body: WhatIfBody, signal?: AbortSignal): Promise<RankResponse> {
    return this.post<RankResponse>("/whatif", body, signal);
  }
}

/** Service location: ?service=... on the page URL, else a localhost default. */
export function serviceBaseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("service");
  return fromQuery ?? "http://127.0.0.1:8645";
}
