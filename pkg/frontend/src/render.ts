// DOM builders for the ranking view. Values are rendered exactly as the
// service reported them (to three decimals); nothing is recomputed here.

import { isBothResponse } from "./api.js";
import type { RankResponse, ResultDoc } from "./api.js";

function formatV(v: number): string {
  return v.toFixed(3);
}

function cell(tag: "td" | "th", text: string, className?: string): HTMLElement {
  const el = document.createElement(tag);
  el.textContent = text;
  if (className !== undefined) {
    el.className = className;
  }
  return el;
}

function excludedNote(excluded: string[]): HTMLElement | null {
  if (excluded.length === 0) return null;
  const note = document.createElement("p");
  note.className = "excluded";
  note.textContent = `Screened out by eligibility: ${excluded.join(", ")}`;
  return note;
}

function emptyState(excluded: string[]): DocumentFragment {
  const fragment = document.createDocumentFragment();
  const message = document.createElement("p");
  message.className = "empty";
  message.textContent = "No alternatives to rank.";
  fragment.append(message);
  const note = excludedNote(excluded);
  if (note !== null) fragment.append(note);
  return fragment;
}

function singleTable(doc: ResultDoc): DocumentFragment {
  const fragment = document.createDocumentFragment();
  const table = document.createElement("table");
  table.className = "ranking";

  const head = table.createTHead().insertRow();
  head.append(cell("th", "Rank"), cell("th", "Alternative"), cell("th", "V"));

  const body = table.createTBody();
  for (const entry of doc.results) {
    const row = body.insertRow();
    if (entry.rank === 1) {
      row.className = "top";
    }
    row.append(
      cell("td", String(entry.rank)),
      cell("td", entry.id),
      cell("td", formatV(entry.v), "num")
    );
  }
  fragment.append(table);
  const note = excludedNote(doc.excluded);
  if (note !== null) fragment.append(note);
  return fragment;
}

function bothTable(topsis: ResultDoc, wp: ResultDoc): DocumentFragment {
  const fragment = document.createDocumentFragment();
  const table = document.createElement("table");
  table.className = "ranking both";

  const head = table.createTHead().insertRow();
  head.append(
    cell("th", "Alternative"),
    cell("th", "V (distance)"),
    cell("th", "Rank"),
    cell("th", "V (product)"),
    cell("th", "Rank"),
    cell("th", "")
  );

  const byId = new Map(wp.results.map((entry) => [entry.id, entry]));
  const body = table.createTBody();
  // rows follow the distance method's order; disagreements get flagged
  for (const entry of topsis.results) {
    const other = byId.get(entry.id);
    if (other === undefined) continue;
    const row = body.insertRow();
    if (entry.rank === 1) {
      row.className = "top";
    }
    const agree = entry.rank === other.rank;
    row.append(
      cell("td", entry.id),
      cell("td", formatV(entry.v), "num"),
      cell("td", String(entry.rank)),
      cell("td", formatV(other.v), "num"),
      cell("td", String(other.rank)),
      cell("td", agree ? "" : "≠", agree ? "" : "disagree")
    );
  }
  fragment.append(table);
  const note = excludedNote(topsis.excluded);
  if (note !== null) fragment.append(note);
  return fragment;
}

/** Replaces `container`'s content with the table for one rank response. */
export function renderRanking(
  container: HTMLElement,
  response: RankResponse
): void {
  container.replaceChildren();
  if (isBothResponse(response)) {
    if (response.topsis.results.length === 0) {
      container.append(emptyState(response.topsis.excluded));
      return;
    }
    container.append(bothTable(response.topsis, response.wp));
    return;
  }
  if (response.results.length === 0) {
    container.append(emptyState(response.excluded));
    return;
  }
  container.append(singleTable(response));
}

/** Shows an error banner above the last good table, with a retry hook. */
export function renderError(
  banner: HTMLElement,
  message: string,
  onRetry: () => void
): void {
  banner.replaceChildren();
  banner.classList.add("visible");
  const text = document.createElement("span");
  text.textContent = message;
  const retry = document.createElement("button");
  retry.type = "button";
  retry.textContent = "Retry";
  retry.addEventListener("click", onRetry);
  banner.append(text, retry);
}

export function clearError(banner: HTMLElement): void {
  banner.replaceChildren();
  banner.classList.remove("visible");
}
