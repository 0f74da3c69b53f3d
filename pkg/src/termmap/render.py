"""Map export (JSON + TSV) and static SVG rendering.

The JSON document is the exchange format the interactive viewer loads
(schema_version 1): top-level keys ``schema_version``, ``terms``,
``clusters``, ``meta``.  Coordinates are written with 9 significant
digits; they are quantized at map-assembly time, so the written decimal
re-parses to the exact same float.

SVG renders place term labels at map positions with font size
proportional to sqrt(weight).  Overlapping labels are resolved by
priority: lower-weight labels overlapped by higher-weight ones are
hidden (ties broken by lexicographic label order).
"""
from __future__ import annotations

import base64
import io
import json
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np
from PIL import Image

from .errors import FormatError, ParameterError, ValidationError
from .overlay import TermMap, color_scale, density, quantize

SCHEMA_VERSION = 1

# Fixed cluster palette; cluster k gets entry (k - 1) mod 20.
CLUSTER_PALETTE = (
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5",
    "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d", "#9edae5",
)

VIEWS = ("density", "cluster", "score")

# Label box estimate used by the occlusion rule (shared with the viewer).
LABEL_WIDTH_PER_CHAR = 0.62
LABEL_HEIGHT_FACTOR = 1.15


def cluster_color(cluster_id: int) -> str:
    return CLUSTER_PALETTE[(cluster_id - 1) % len(CLUSTER_PALETTE)]


def _map_document(tm: TermMap) -> dict:
    terms = []
    for i, label in enumerate(tm.labels):
        entry = {
            "id": i + 1,
            "label": label,
            "x": float(tm.coords[i, 0]),
            "y": float(tm.coords[i, 1]),
            "weight": int(tm.weights[i]),
            "cluster": int(tm.clusters[i]),
        }
        if tm.scores is not None:
            entry["score"] = quantize(float(tm.scores[i]))
        terms.append(entry)
    ids, counts = np.unique(tm.clusters, return_counts=True) if len(tm) else ([], [])
    clusters = [
        {"id": int(c), "size": int(n), "color": cluster_color(int(c))}
        for c, n in zip(ids, counts)
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "terms": terms,
        "clusters": clusters,
        "meta": tm.meta,
    }


def export_map(tm: TermMap, json_path: str | Path,
               tsv_path: str | Path | None = None) -> None:
    """Write the JSON export and the flat TSV map file."""
    json_path = Path(json_path)
    doc = _map_document(tm)
    json_path.write_text(
        json.dumps(doc, ensure_ascii=False, separators=(",", ":")) + "\n",
        encoding="utf-8",
    )
    if tsv_path is None:
        tsv_path = json_path.with_suffix(".tsv")
    with open(tsv_path, "w", encoding="utf-8") as f:
        f.write("id\tlabel\tx\ty\tweight\tcluster\tscore\n")
        for t in doc["terms"]:
            score = f"{t['score']:.9g}" if "score" in t else ""
            f.write(
                f"{t['id']}\t{t['label']}\t{t['x']:.9g}\t{t['y']:.9g}"
                f"\t{t['weight']}\t{t['cluster']}\t{score}\n"
            )


def import_map(json_path: str | Path) -> TermMap:
    """Re-load an exported map; the inverse of export_map for TermMap."""
    doc = json.loads(Path(json_path).read_text(encoding="utf-8"))
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise FormatError(
            f"unsupported map schema: expected {SCHEMA_VERSION}, found {version!r}"
        )
    terms = doc.get("terms", [])
    if not terms:
        raise ValidationError("map export contains no terms")
    expected_ids = list(range(1, len(terms) + 1))
    if [t["id"] for t in terms] != expected_ids:
        raise ValidationError("term ids must be dense 1..n in order")
    labels = [t["label"] for t in terms]
    coords = np.array([[t["x"], t["y"]] for t in terms], dtype=float)
    weights = np.array([t["weight"] for t in terms], dtype=np.int64)
    clusters = np.array([t["cluster"] for t in terms], dtype=np.int64)
    with_score = ["score" in t for t in terms]
    if any(with_score) and not all(with_score):
        raise ValidationError("score must be present for all terms or none")
    scores = (np.array([t["score"] for t in terms], dtype=float)
              if all(with_score) else None)
    listed = {c["id"] for c in doc.get("clusters", [])}
    if listed and not set(clusters.tolist()) <= listed:
        raise ValidationError("term references a cluster id not in clusters")
    return TermMap(labels=labels, coords=coords, weights=weights,
                   clusters=clusters, scores=scores, meta=doc.get("meta", {}))


# ---------------------------------------------------------------------------
# Static SVG rendering

def _label_priority(tm: TermMap) -> list[int]:
    return sorted(range(len(tm)), key=lambda i: (-tm.weights[i], tm.labels[i]))


def visible_labels(tm: TermMap, positions: np.ndarray, font_sizes: np.ndarray) -> list[int]:
    """Greedy occlusion: walk terms by priority (weight desc, label asc)
    and keep a label only if its box misses every box kept so far."""
    kept: list[int] = []
    boxes: list[tuple[float, float, float, float]] = []
    for i in _label_priority(tm):
        w = LABEL_WIDTH_PER_CHAR * font_sizes[i] * max(len(tm.labels[i]), 1)
        h = LABEL_HEIGHT_FACTOR * font_sizes[i]
        x, y = positions[i]
        box = (x - w / 2, y - h / 2, x + w / 2, y + h / 2)
        if all(box[2] <= b[0] or b[2] <= box[0] or box[3] <= b[1] or b[3] <= box[1]
               for b in boxes):
            kept.append(i)
            boxes.append(box)
    return sorted(kept)


def _density_png(tm: TermMap, bounds, grid_size, bandwidth) -> bytes:
    field = density(tm, grid_size=grid_size, bandwidth=bandwidth, bounds=bounds)
    colors = color_scale(field.grid.ravel(), mode="density")
    arr = np.array(colors, dtype=np.uint8).reshape(
        field.grid.shape[0], field.grid.shape[1], 3)
    # row 0 of the grid is the lowest y; images count rows downward
    img = Image.fromarray(arr[::-1], mode="RGB")
    buf = io.BytesIO()
    img.save(buf, format="PNG", optimize=False)
    return buf.getvalue()


def render_static(tm: TermMap, view: str, size: int = 960,
                  bandwidth: float | None = None,
                  grid_size: tuple[int, int] = (256, 256),
                  path: str | Path | None = None) -> str:
    """Render one view (density | cluster | score) to an SVG string."""
    if view not in VIEWS:
        raise ParameterError(f"view must be one of {VIEWS}, got {view!r}")
    if len(tm) == 0:
        raise ParameterError("empty map")
    if view == "score" and tm.scores is None:
        raise ParameterError("score view requires a map with scores")

    lo = tm.coords.min(axis=0)
    hi = tm.coords.max(axis=0)
    span = np.maximum(hi - lo, 1e-12)
    margin = 0.06 * size
    scale = (size - 2 * margin) / span.max()
    offset = (size - scale * span) / 2.0

    def to_screen(xy):
        sx = offset[0] + (xy[0] - lo[0]) * scale
        sy = size - (offset[1] + (xy[1] - lo[1]) * scale)
        return sx, sy

    positions = np.array([to_screen(c) for c in tm.coords])
    wmax = float(tm.weights.max())
    font_sizes = (size / 25.0) * np.sqrt(tm.weights / wmax)
    shown = visible_labels(tm, positions, font_sizes)

    if view == "cluster":
        fills = [cluster_color(int(c)) for c in tm.clusters]
    elif view == "score":
        fills = ["#%02x%02x%02x" % rgb for rgb in color_scale(tm.scores, "score")]
    else:
        fills = ["#1a1a1a"] * len(tm)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" xmlns:xlink="http://www.w3.org/1999/xlink" '
        f'version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="#ffffff"/>',
    ]
    if view == "density":
        # rasterized field beneath the labels, covering the data window
        if bandwidth is None:
            from .overlay import default_bandwidth
            bandwidth = default_bandwidth(tm)
        bounds = (lo[0] - 2 * bandwidth, lo[1] - 2 * bandwidth,
                  hi[0] + 2 * bandwidth, hi[1] + 2 * bandwidth)
        png = _density_png(tm, bounds, grid_size, bandwidth)
        bx0, by0 = to_screen((bounds[0], bounds[3]))
        bx1, by1 = to_screen((bounds[2], bounds[1]))
        b64 = base64.b64encode(png).decode("ascii")
        out.append(
            f'<image x="{bx0:.2f}" y="{by0:.2f}" width="{bx1 - bx0:.2f}" '
            f'height="{by1 - by0:.2f}" preserveAspectRatio="none" '
            f'xlink:href="data:image/png;base64,{b64}"/>'
        )
    for i in shown:
        x, y = positions[i]
        fs = font_sizes[i]
        out.append(
            f'<text x="{x:.2f}" y="{y + 0.35 * fs:.2f}" text-anchor="middle" '
            f'font-family="Helvetica,Arial,sans-serif" font-size="{fs:.2f}" '
            f'fill="{fills[i]}">{escape(tm.labels[i])}</text>'
        )
    out.append("</svg>")
    svg = "\n".join(out) + "\n"
    if path is not None:
        Path(path).write_text(svg, encoding="utf-8")
    return svg
