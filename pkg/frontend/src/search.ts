/** Label search: case-insensitive substring match; the best hit is the
 * shortest label, ties broken lexicographically. */

import type { MapExport } from "./types.js";

export interface SearchResult {
  /** Indices of all matching terms, best first. */
  matches: number[];
  /** Index of the best match, or null when nothing matches. */
  best: number | null;
}

export function searchLabels(map: MapExport, query: string): SearchResult {
  const q = query.trim().toLowerCase();
  if (!q) {
    return { matches: [], best: null };
  }
  const matches = map.terms
    .map((t, i) => ({ i, label: t.label }))
    .filter(({ label }) => label.toLowerCase().includes(q));
  matches.sort((a, b) => {
    if (a.label.length !== b.label.length) return a.label.length - b.label.length;
    return a.label < b.label ? -1 : a.label > b.label ? 1 : 0;
  });
  const order = matches.map((m) => m.i);
  return { matches: order, best: order.length ? order[0]! : null };
}
