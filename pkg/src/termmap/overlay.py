"""Display weights and overlay channels: term density, cluster colors,
and score colors (mean document score or subset share).

The density field is a Gaussian kernel sum, weighted by document
frequency and normalized so the hottest cell is exactly 1.  Score colors
run through a fixed blue-green-yellow-red ramp; score mode maps the
10th..90th percentile of the values onto the ramp and clamps outside, so
heavy-tailed score distributions (citation counts) keep a usable palette.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ParameterError, ValidationError


def quantize(x: float, digits: int = 9) -> float:
    """Round to ``digits`` significant decimal digits.

    Map coordinates are quantized at assembly time so that the exported
    decimal representation re-parses to the exact same float.
    """
    return float(f"{x:.{digits}g}")


@dataclass(frozen=True)
class TermMap:
    """A finished map: labels, positions, weights, clusters, and scores."""

    labels: list[str]
    coords: np.ndarray
    weights: np.ndarray
    clusters: np.ndarray
    scores: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.labels)


def build_term_map(labels, coords, weights, clusters, meta=None) -> TermMap:
    """Assemble and validate a TermMap; coordinates are quantized to
    9 significant digits for exact serialization round-trips."""
    coords = np.asarray(coords, dtype=float)
    n = len(labels)
    if coords.shape != (n, 2):
        raise ValidationError("coords must have shape (n, 2)")
    weights = np.asarray(weights, dtype=np.int64)
    clusters = np.asarray(clusters, dtype=np.int64)
    if weights.shape != (n,) or clusters.shape != (n,):
        raise ValidationError("weights/clusters must have length n")
    if n and clusters.min() < 1:
        raise ValidationError("cluster ids must be 1-based")
    q = np.vectorize(quantize)(coords) if n else coords
    return TermMap(labels=list(labels), coords=q, weights=weights,
                   clusters=clusters, scores=None, meta=dict(meta or {}))


@dataclass(frozen=True)
class DensityField:
    grid: np.ndarray          # (H, W), row 0 at the lowest y, in [0, 1]
    bounds: tuple             # (x0, y0, x1, y1) in map coordinates
    bandwidth: float


def default_bandwidth(tm: TermMap) -> float:
    """10% of the bounding-box diagonal (1.0 for degenerate boxes)."""
    if len(tm) == 0:
        raise ParameterError("empty map")
    span = tm.coords.max(axis=0) - tm.coords.min(axis=0)
    diag = float(np.hypot(*span))
    return 0.1 * diag if diag > 0 else 1.0


def density_at(tm: TermMap, points: np.ndarray, bandwidth: float) -> np.ndarray:
    """Unnormalized kernel sum at arbitrary points."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    d2 = ((points[:, None, :] - tm.coords[None, :, :]) ** 2).sum(axis=2)
    return (tm.weights[None, :] * np.exp(-d2 / (2.0 * bandwidth ** 2))).sum(axis=1)


def density(tm: TermMap, grid_size: tuple[int, int] = (256, 256),
            bandwidth: float | None = None, bounds: tuple | None = None) -> DensityField:
    """Weighted Gaussian density sampled at grid cell centers.

    The default evaluation window is the coordinate bounding box expanded
    by two bandwidths on every side; ``bounds`` overrides it.
    """
    if len(tm) == 0:
        raise ParameterError("empty map")
    W, H = grid_size
    if W < 1 or H < 1:
        raise ParameterError(f"grid_size must be positive, got {grid_size}")
    if bandwidth is None:
        bandwidth = default_bandwidth(tm)
    if bandwidth <= 0:
        raise ParameterError(f"bandwidth must be > 0, got {bandwidth}")
    if bounds is None:
        x0, y0 = tm.coords.min(axis=0) - 2.0 * bandwidth
        x1, y1 = tm.coords.max(axis=0) + 2.0 * bandwidth
    else:
        x0, y0, x1, y1 = bounds
    xs = x0 + (np.arange(W) + 0.5) * (x1 - x0) / W
    ys = y0 + (np.arange(H) + 0.5) * (y1 - y0) / H
    grid = np.empty((H, W))
    inv = 1.0 / (2.0 * bandwidth ** 2)
    for r, y in enumerate(ys):
        d2 = (xs[:, None] - tm.coords[None, :, 0]) ** 2 \
            + (y - tm.coords[None, :, 1]) ** 2
        grid[r] = (tm.weights[None, :] * np.exp(-d2 * inv)).sum(axis=1)
    peak = grid.max()
    if peak > 0:
        grid /= peak
    return DensityField(grid=grid, bounds=(float(x0), float(y0), float(x1), float(y1)),
                        bandwidth=float(bandwidth))


def _gather_scores(tm: TermMap, term_doc_sets, values: dict, what: str) -> list[list]:
    per_term = []
    for label in tm.labels:
        docs = term_doc_sets.get(label)
        if not docs:
            raise ValidationError(f"term {label!r} has no document set")
        vals = []
        for d in sorted(docs):
            v = values.get(d)
            if v is None:
                raise ValidationError(f"document {d!r} has no {what}")
            vals.append(v)
        per_term.append(vals)
    return per_term


def score_mean(tm: TermMap, term_doc_sets, doc_scores: dict[str, float | None]) -> TermMap:
    """Mean document score over the documents containing each term."""
    per_term = _gather_scores(tm, term_doc_sets, doc_scores, "score")
    scores = np.array([float(np.mean(v)) for v in per_term])
    return replace(tm, scores=scores)


def score_subset_share(tm: TermMap, term_doc_sets,
                       subset_flags: dict[str, bool | None]) -> TermMap:
    """Fraction of each term's documents that carry the subset flag."""
    per_term = _gather_scores(tm, term_doc_sets, subset_flags, "subset flag")
    scores = np.array([float(np.mean([1.0 if v else 0.0 for v in vals]))
                       for vals in per_term])
    return replace(tm, scores=scores)


# Blue -> green -> yellow -> red, linearly interpolated.
COLOR_RAMP = ((0, 0, 255), (0, 255, 0), (255, 255, 0), (255, 0, 0))

SCORE_PERCENTILES = (10.0, 90.0)


def _ramp(t: float) -> tuple[int, int, int]:
    t = min(max(t, 0.0), 1.0)
    seg = t * (len(COLOR_RAMP) - 1)
    i = min(int(seg), len(COLOR_RAMP) - 2)
    u = seg - i
    c0, c1 = COLOR_RAMP[i], COLOR_RAMP[i + 1]
    return tuple(int(a + u * (b - a) + 0.5) for a, b in zip(c0, c1))


def color_scale(values, mode: str) -> list[tuple[int, int, int]]:
    """RGB per value.  ``density`` maps [0, 1] directly onto the ramp;
    ``score`` maps the 10th..90th percentile range and clamps outside."""
    values = np.asarray(values, dtype=float)
    if not np.isfinite(values).all():
        raise ParameterError("values must be finite")
    if mode == "density":
        ts = values
    elif mode == "score":
        lo, hi = np.percentile(values, SCORE_PERCENTILES)
        ts = np.full_like(values, 0.5) if hi == lo else (values - lo) / (hi - lo)
    else:
        raise ParameterError(f"mode must be 'density' or 'score', got {mode!r}")
    return [_ramp(float(t)) for t in ts]
