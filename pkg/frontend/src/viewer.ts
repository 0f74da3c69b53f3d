/** The viewer's state machine, kept free of DOM concerns so the behavior
 * contracts (load, search, overlay switching, pan/zoom) are unit-testable.
 */

import { clusterColor, densityColor, rgbCss, scoreColors } from "./color.js";
import { panBy, fitCamera, worldToScreen, zoomAt } from "./camera.js";
import { densityAt, defaultBandwidth, globalPeak } from "./density.js";
import { visibleLabels } from "./declutter.js";
import { searchLabels } from "./search.js";
import { validateExport } from "./schema.js";
import type { Bounds, Camera, MapExport, OverlayMode, Viewport } from "./types.js";
import { hasScores, mapBounds } from "./types.js";

export interface TermView {
  index: number;
  label: string;
  x: number;
  y: number;
  sx: number;
  sy: number;
  fontPx: number;
  color: string;
  visible: boolean;
  highlighted: boolean;
}

export interface Notice {
  kind: "info" | "error";
  text: string;
}

export class ViewState {
  map: MapExport | null = null;
  camera: Camera = { cx: 0, cy: 0, zoom: 1 };
  overlay: OverlayMode = "cluster";
  query = "";
  matchedTerm: number | null = null;
  matches: number[] = [];
  hoverTerm: number | null = null;
  notice: Notice | null = null;
  bandwidth = 1;
  densityPeak = 1;

  constructor(public viewport: Viewport) {}

  get bounds(): Bounds {
    if (!this.map) return { x0: -1, y0: -1, x1: 1, y1: 1 };
    return mapBounds(this.map);
  }

  /** Load a parsed JSON document; resets every piece of view state. */
  open(doc: unknown): void {
    const map = validateExport(doc);
    this.map = map;
    this.camera = fitCamera(mapBounds(map), this.viewport);
    this.overlay = "cluster";
    this.query = "";
    this.matchedTerm = null;
    this.matches = [];
    this.hoverTerm = null;
    this.notice = null;
    this.bandwidth = defaultBandwidth(map);
    this.densityPeak = globalPeak(map, this.bandwidth);
  }

  scoreOverlayAvailable(): boolean {
    return this.map !== null && hasScores(this.map);
  }

  setOverlay(mode: OverlayMode): void {
    if (!this.map) return;
    if (mode === "score" && !this.scoreOverlayAvailable()) {
      return; // control stays disabled; never an exception
    }
    this.overlay = mode;
  }

  search(query: string): void {
    if (!this.map) return;
    this.query = query;
    if (!query.trim()) {
      this.matchedTerm = null;
      this.matches = [];
      this.notice = null;
      return;
    }
    const result = searchLabels(this.map, query);
    this.matches = result.matches;
    this.matchedTerm = result.best;
    if (result.best === null) {
      this.notice = { kind: "info", text: `no results for "${query.trim()}"` };
      return; // camera unchanged
    }
    this.notice = null;
    const t = this.map.terms[result.best]!;
    this.camera = { ...this.camera, cx: t.x, cy: t.y };
  }

  zoomAtScreen(sx: number, sy: number, factor: number): void {
    if (!this.map) return;
    this.camera = zoomAt(this.camera, this.viewport, this.bounds, sx, sy, factor);
  }

  panByPixels(dx: number, dy: number): void {
    if (!this.map) return;
    this.camera = panBy(this.camera, this.bounds, dx, dy);
  }

  hoverAt(sx: number, sy: number, radiusPx = 18): void {
    if (!this.map) {
      this.hoverTerm = null;
      return;
    }
    let best: number | null = null;
    let bestD = radiusPx;
    this.map.terms.forEach((t, i) => {
      const [tx, ty] = worldToScreen(this.camera, this.viewport, t.x, t.y);
      const d = Math.hypot(tx - sx, ty - sy);
      if (d < bestD) {
        best = i;
        bestD = d;
      }
    });
    this.hoverTerm = best;
  }

  /** Colors per term for the current overlay; geometry not included. */
  termColors(): string[] {
    const map = this.map!;
    if (this.overlay === "cluster") {
      return map.terms.map((t) => clusterColor(t.cluster));
    }
    if (this.overlay === "score") {
      const rgb = scoreColors(map.terms.map((t) => t.score!));
      return rgb.map(rgbCss);
    }
    // density mode: sample the field at each term, normalized by the peak
    return map.terms.map((t) =>
      rgbCss(densityRgb(densityAt(map, t.x, t.y, this.bandwidth) / this.densityPeak)),
    );
  }

  /** The full scene: every term, its screen position, color, visibility. */
  scene(): TermView[] {
    const map = this.map;
    if (!map) return [];
    const colors = this.termColors();
    const shown = visibleLabels(map, this.camera.zoom);
    const maxWeight = Math.max(...map.terms.map((t) => t.weight));
    return map.terms.map((t, i) => {
      const [sx, sy] = worldToScreen(this.camera, this.viewport, t.x, t.y);
      return {
        index: i,
        label: t.label,
        x: t.x,
        y: t.y,
        sx,
        sy,
        fontPx: Math.max(16 * Math.sqrt(t.weight / maxWeight), 9),
        color: colors[i]!,
        visible: shown.has(i),
        highlighted: i === this.matchedTerm,
      };
    });
  }
}

function densityRgb(t: number): [number, number, number] {
  return densityColor(Math.min(Math.max(t, 0), 1));
}
