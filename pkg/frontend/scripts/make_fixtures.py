#!/usr/bin/env python3
"""Regenerate the viewer test fixtures with the primary pipeline.

Writes test/fixtures/map.json (a real export of the bundled toy corpus,
with score overlay so all three overlay modes are exercised) and
test/fixtures/color_parity.json (ramp and percentile values straight from
the primary implementation, which the TypeScript port must reproduce
exactly).
"""
import json
import sys
import tempfile
from pathlib import Path

HERE = Path(__file__).resolve().parent
FIXTURES = HERE.parent / "test" / "fixtures"
REPO = HERE.parents[1]

sys.path.insert(0, str(REPO / "src"))

from termmap.cli import RunConfig, run_pipeline          # noqa: E402
from termmap.overlay import color_scale                  # noqa: E402


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp)
        cfg = RunConfig(
            input=str(REPO / "src" / "termmap" / "data" / "toy_corpus.tsv"),
            score_col="score", subset_col="subset",
            min_occ=2, select=100, seed=13, restarts=4, cluster_restarts=8,
            grid=64, overlay="score-mean", out=str(out),
        )
        cfg.validate()
        run_pipeline(cfg, out)
        (FIXTURES / "map.json").write_text(
            (out / "map.json").read_text(encoding="utf-8"), encoding="utf-8")

    density_values = [0.0, 1 / 6, 1 / 3, 0.5, 2 / 3, 5 / 6, 1.0, 0.05, 0.73]
    score_values = [0.0, 3.5, 7.25, 11.0, 2.0, 9.9, 5.0, 5.0, 8.1, 1.2, 6.6]
    parity = {
        "density": {
            "values": density_values,
            "rgb": color_scale(density_values, "density"),
        },
        "score": {
            "values": score_values,
            "rgb": color_scale(score_values, "score"),
        },
    }
    (FIXTURES / "color_parity.json").write_text(
        json.dumps(parity, indent=1) + "\n", encoding="utf-8")
    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
