/** Label visibility: the renderer's occlusion rule, applied in world space
 * so the outcome is a pure function of (map, zoom): pan-independent.
 *
 * Labels are walked in priority order (weight descending, then label
 * ascending) and kept when their box misses every box kept so far.  Box
 * sizes are the on-screen label extents divided by the zoom, so zooming
 * in shrinks the boxes in world terms and more labels appear.
 */

import type { ExportTerm, MapExport } from "./types.js";

export const LABEL_WIDTH_PER_CHAR = 0.62;
export const LABEL_HEIGHT_FACTOR = 1.15;
export const BASE_FONT_PX = 16;
export const MIN_FONT_PX = 9;

export function fontSizePx(term: ExportTerm, maxWeight: number): number {
  return BASE_FONT_PX * Math.sqrt(term.weight / maxWeight);
}

export function labelPriority(map: MapExport): number[] {
  const order = map.terms.map((_, i) => i);
  order.sort((a, b) => {
    const ta = map.terms[a]!;
    const tb = map.terms[b]!;
    if (tb.weight !== ta.weight) return tb.weight - ta.weight;
    return ta.label < tb.label ? -1 : ta.label > tb.label ? 1 : 0;
  });
  return order;
}

/** Indices of the terms whose labels are visible at this zoom. */
export function visibleLabels(map: MapExport, zoom: number): Set<number> {
  const maxWeight = Math.max(...map.terms.map((t) => t.weight));
  const kept: number[] = [];
  const boxes: [number, number, number, number][] = [];
  for (const i of labelPriority(map)) {
    const t = map.terms[i]!;
    const font = Math.max(fontSizePx(t, maxWeight), MIN_FONT_PX);
    const w = (LABEL_WIDTH_PER_CHAR * font * Math.max(t.label.length, 1)) / zoom;
    const h = (LABEL_HEIGHT_FACTOR * font) / zoom;
    const box: [number, number, number, number] =
      [t.x - w / 2, t.y - h / 2, t.x + w / 2, t.y + h / 2];
    const free = boxes.every(
      (b) => box[2] <= b[0] || b[2] <= box[0] || box[3] <= b[1] || b[3] <= box[1],
    );
    if (free) {
      kept.push(i);
      boxes.push(box);
    }
  }
  return new Set(kept);
}
