/** Client-side density field: the same weighted Gaussian the renderer
 * uses, recomputed at the current view resolution so zooming stays sharp.
 * Values are normalized by the map's global peak (sampled on a reference
 * grid over the data bounds), so colors do not change while panning.
 */

import type { Bounds, MapExport } from "./types.js";
import { mapBounds } from "./types.js";

export function defaultBandwidth(map: MapExport): number {
  const b = mapBounds(map);
  const diag = Math.hypot(b.x1 - b.x0, b.y1 - b.y0);
  return diag > 0 ? 0.1 * diag : 1.0;
}

export function densityAt(map: MapExport, x: number, y: number,
                          bandwidth: number): number {
  const inv = 1 / (2 * bandwidth * bandwidth);
  let total = 0;
  for (const t of map.terms) {
    const dx = x - t.x;
    const dy = y - t.y;
    total += t.weight * Math.exp(-(dx * dx + dy * dy) * inv);
  }
  return total;
}

export function globalPeak(map: MapExport, bandwidth: number,
                           samples = 96): number {
  const b = mapBounds(map);
  const x0 = b.x0 - 2 * bandwidth;
  const y0 = b.y0 - 2 * bandwidth;
  const x1 = b.x1 + 2 * bandwidth;
  const y1 = b.y1 + 2 * bandwidth;
  let peak = 0;
  for (let r = 0; r < samples; r++) {
    const y = y0 + ((r + 0.5) * (y1 - y0)) / samples;
    for (let c = 0; c < samples; c++) {
      const x = x0 + ((c + 0.5) * (x1 - x0)) / samples;
      peak = Math.max(peak, densityAt(map, x, y, bandwidth));
    }
  }
  // the peak is at least the field value at every term position
  for (const t of map.terms) {
    peak = Math.max(peak, densityAt(map, t.x, t.y, bandwidth));
  }
  return peak;
}

/** Row-major W x H grid of normalized density over `view` bounds. */
export function densityGrid(map: MapExport, view: Bounds, w: number, h: number,
                            bandwidth: number, peak: number): Float32Array {
  const grid = new Float32Array(w * h);
  const scale = peak > 0 ? 1 / peak : 0;
  for (let r = 0; r < h; r++) {
    const y = view.y1 - ((r + 0.5) * (view.y1 - view.y0)) / h;
    for (let c = 0; c < w; c++) {
      const x = view.x0 + ((c + 0.5) * (view.x1 - view.x0)) / w;
      grid[r * w + c] = Math.min(densityAt(map, x, y, bandwidth) * scale, 1);
    }
  }
  return grid;
}
