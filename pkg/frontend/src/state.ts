// Control-panel state and request bookkeeping. The displayed table must
// always come from the newest service response, so every request carries a
// serial number and stale responses are dropped on arrival.

import type {
  MethodChoice,
  Override,
  RankBody,
  WhatIfBody,
} from "./api.js";

export type Controls = {
  scheme: string;
  dataset: string;
  method: MethodChoice;
  overrides: Record<string, Override>;
};

export function initialControls(scheme: string, dataset: string): Controls {
  return { scheme, dataset, method: "topsis", overrides: {} };
}

/**
 * Merges `patch` into the override for one criterion, returning new
 * overrides. Keys patched to undefined are removed; a criterion whose
 * override becomes empty is dropped entirely, so "no overrides" is always
 * represented as an empty object.
 */
export function patchOverride(
  overrides: Record<string, Override>,
  criterion: string,
  patch: Override
): Record<string, Override> {
  const next: Record<string, Override> = { ...overrides };
  const merged: Override = { ...next[criterion] };
  for (const key of ["weight", "weight_term", "orientation"] as const) {
    if (key in patch) {
      if (patch[key] === undefined) {
        delete merged[key];
      } else {
        (merged as Record<string, unknown>)[key] = patch[key];
      }
    }
  }
  // weight and weight_term are mutually exclusive in the service API
  if ("weight" in patch && patch.weight !== undefined) {
    delete merged.weight_term;
  }
  if ("weight_term" in patch && patch.weight_term !== undefined) {
    delete merged.weight;
  }
  if (Object.keys(merged).length === 0) {
    delete next[criterion];
  } else {
    next[criterion] = merged;
  }
  return next;
}

export function hasOverrides(controls: Controls): boolean {
  return Object.keys(controls.overrides).length > 0;
}

export function rankBody(controls: Controls): RankBody {
  return {
    scheme: controls.scheme,
    dataset: controls.dataset,
    method: controls.method,
  };
}

export function whatIfBody(controls: Controls): WhatIfBody {
  return { ...rankBody(controls), overrides: controls.overrides };
}

/**
 * Serial numbers for requests: `issue` stamps a new request, `admit` says
 * whether a response with that stamp is still the newest one issued.
 */
export class RequestGate {
  private lastId = 0;

  issue(): number {
    this.lastId += 1;
    return this.lastId;
  }

  admit(id: number): boolean {
    return id === this.lastId;
  }
}
