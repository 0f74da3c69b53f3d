/** Color ramps and the cluster palette.
 *
 * These mirror the renderer's documented contract exactly: the
 * blue-green-yellow-red ramp with half-up rounding, score values mapped
 * through the 10th..90th percentile (linear interpolation, as numpy's
 * default percentile does) and clamped, and the fixed 20-color cluster
 * palette indexed by (id - 1) mod 20.
 */

export type RGB = [number, number, number];

export const COLOR_RAMP: RGB[] = [
  [0, 0, 255],
  [0, 255, 0],
  [255, 255, 0],
  [255, 0, 0],
];

export const CLUSTER_PALETTE = [
  "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
  "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5",
  "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d", "#9edae5",
];

export function clusterColor(clusterId: number): string {
  const idx = (clusterId - 1) % CLUSTER_PALETTE.length;
  return CLUSTER_PALETTE[(idx + CLUSTER_PALETTE.length) % CLUSTER_PALETTE.length]!;
}

export function ramp(t: number): RGB {
  const u = Math.min(Math.max(t, 0), 1);
  const seg = u * (COLOR_RAMP.length - 1);
  const i = Math.min(Math.floor(seg), COLOR_RAMP.length - 2);
  const f = seg - i;
  const c0 = COLOR_RAMP[i]!;
  const c1 = COLOR_RAMP[i + 1]!;
  return [0, 1, 2].map((k) =>
    Math.floor(c0[k as 0 | 1 | 2] + f * (c1[k as 0 | 1 | 2] - c0[k as 0 | 1 | 2]) + 0.5),
  ) as RGB;
}

/** Linear-interpolation percentile over the values (numpy's default). */
export function percentile(values: number[], p: number): number {
  if (values.length === 0) throw new Error("percentile of empty list");
  const sorted = [...values].sort((a, b) => a - b);
  const rank = (p / 100) * (sorted.length - 1);
  const lo = Math.floor(rank);
  const hi = Math.ceil(rank);
  const frac = rank - lo;
  return sorted[lo]! + frac * (sorted[hi]! - sorted[lo]!);
}

export function scoreColors(values: number[]): RGB[] {
  const lo = percentile(values, 10);
  const hi = percentile(values, 90);
  return values.map((v) => ramp(hi === lo ? 0.5 : (v - lo) / (hi - lo)));
}

export function densityColor(t: number): RGB {
  return ramp(t);
}

export function rgbCss([r, g, b]: RGB): string {
  return `rgb(${r},${g},${b})`;
}
