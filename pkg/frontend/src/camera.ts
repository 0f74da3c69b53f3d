/** Camera math: world/screen transforms, fit-to-view, anchored zoom,
 * and the pan/zoom clamps.  Screen y grows downward, world y upward.
 */

import type { Bounds, Camera, Viewport } from "./types.js";

export const MAX_ZOOM_FACTOR = 50;
const FIT_FILL = 0.9;

export function fitZoom(bounds: Bounds, vp: Viewport): number {
  const spanX = Math.max(bounds.x1 - bounds.x0, 1e-12);
  const spanY = Math.max(bounds.y1 - bounds.y0, 1e-12);
  return FIT_FILL * Math.min(vp.width / spanX, vp.height / spanY);
}

export function fitCamera(bounds: Bounds, vp: Viewport): Camera {
  return {
    cx: (bounds.x0 + bounds.x1) / 2,
    cy: (bounds.y0 + bounds.y1) / 2,
    zoom: fitZoom(bounds, vp),
  };
}

export function worldToScreen(cam: Camera, vp: Viewport, x: number, y: number):
    [number, number] {
  return [
    vp.width / 2 + (x - cam.cx) * cam.zoom,
    vp.height / 2 - (y - cam.cy) * cam.zoom,
  ];
}

export function screenToWorld(cam: Camera, vp: Viewport, sx: number, sy: number):
    [number, number] {
  return [
    cam.cx + (sx - vp.width / 2) / cam.zoom,
    cam.cy - (sy - vp.height / 2) / cam.zoom,
  ];
}

export function clampZoom(zoom: number, bounds: Bounds, vp: Viewport): number {
  const base = fitZoom(bounds, vp);
  return Math.min(Math.max(zoom, base), base * MAX_ZOOM_FACTOR);
}

/** Keep at least part of the content inside the viewport. */
export function clampPan(cam: Camera, bounds: Bounds): Camera {
  return {
    ...cam,
    cx: Math.min(Math.max(cam.cx, bounds.x0), bounds.x1),
    cy: Math.min(Math.max(cam.cy, bounds.y0), bounds.y1),
  };
}

/** Zoom by `factor` about the screen point (sx, sy): the world point under
 * the cursor stays under the cursor (up to the zoom clamp). */
export function zoomAt(cam: Camera, vp: Viewport, bounds: Bounds,
                       sx: number, sy: number, factor: number): Camera {
  const [wx, wy] = screenToWorld(cam, vp, sx, sy);
  const zoom = clampZoom(cam.zoom * factor, bounds, vp);
  // solve worldToScreen(cam', (wx, wy)) == (sx, sy) for the new center
  const cx = wx - (sx - vp.width / 2) / zoom;
  const cy = wy + (sy - vp.height / 2) / zoom;
  return clampPan({ cx, cy, zoom }, bounds);
}

export function panBy(cam: Camera, bounds: Bounds, dxPixels: number,
                      dyPixels: number): Camera {
  return clampPan({
    ...cam,
    cx: cam.cx - dxPixels / cam.zoom,
    cy: cam.cy + dyPixels / cam.zoom,
  }, bounds);
}
