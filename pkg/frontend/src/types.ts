/** Shapes of the map export (schema_version 1) and viewer state. */

export interface ExportTerm {
  id: number;
  label: string;
  x: number;
  y: number;
  weight: number;
  cluster: number;
  score?: number;
}

export interface ExportCluster {
  id: number;
  size: number;
  color: string;
}

export interface MapExport {
  schema_version: number;
  terms: ExportTerm[];
  clusters: ExportCluster[];
  meta: Record<string, unknown>;
}

export type OverlayMode = "cluster" | "density" | "score";

export interface Bounds {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export interface Camera {
  /** World coordinates at the viewport center. */
  cx: number;
  cy: number;
  /** Screen pixels per world unit. */
  zoom: number;
}

export interface Viewport {
  width: number;
  height: number;
}

export function mapBounds(map: MapExport): Bounds {
  let x0 = Infinity, y0 = Infinity, x1 = -Infinity, y1 = -Infinity;
  for (const t of map.terms) {
    x0 = Math.min(x0, t.x);
    y0 = Math.min(y0, t.y);
    x1 = Math.max(x1, t.x);
    y1 = Math.max(y1, t.y);
  }
  return { x0, y0, x1, y1 };
}

export function hasScores(map: MapExport): boolean {
  return map.terms.length > 0 && map.terms.every((t) => t.score !== undefined);
}
