import json

import numpy as np
import pytest

from termmap import build_term_map, export_map, import_map, render_static
from termmap.errors import FormatError, ParameterError, ValidationError
from termmap.overlay import TermMap
from termmap.render import CLUSTER_PALETTE, cluster_color, visible_labels


def small_map(with_scores=False, n=3):
    coords = np.array([[-0.6, 0.1], [0.5, -0.2], [0.1, 0.4]])[:n]
    tm = build_term_map(
        labels=["citation analysis", "search engine", "library"][:n],
        coords=coords,
        weights=[30, 20, 10][:n],
        clusters=[1, 2, 1][:n],
        meta={"parameters": {"min_occ": 2}, "seed": 1,
              "corpus": {"documents": 9}, "overlay": "none"},
    )
    if with_scores:
        from dataclasses import replace
        tm = replace(tm, scores=np.array([4.0, 2.0, 1.0][:n]))
    return tm


class TestExport:
    def test_round_trip_exact(self, tmp_path):
        tm = small_map(with_scores=True)
        export_map(tm, tmp_path / "map.json")
        back = import_map(tmp_path / "map.json")
        assert back.labels == tm.labels
        assert np.array_equal(back.coords, tm.coords)  # bit-exact
        assert np.array_equal(back.weights, tm.weights)
        assert np.array_equal(back.clusters, tm.clusters)
        assert np.array_equal(back.scores, tm.scores)
        assert back.meta == tm.meta

    def test_terms_array_and_schema(self, tmp_path):
        export_map(small_map(n=2), tmp_path / "m.json")
        doc = json.loads((tmp_path / "m.json").read_text())
        assert doc["schema_version"] == 1
        assert len(doc["terms"]) == 2
        assert [t["id"] for t in doc["terms"]] == [1, 2]
        assert {c["id"] for c in doc["clusters"]} == {1, 2}
        for c in doc["clusters"]:
            assert c["color"] == cluster_color(c["id"])

    def test_score_omitted_when_absent(self, tmp_path):
        export_map(small_map(), tmp_path / "m.json")
        doc = json.loads((tmp_path / "m.json").read_text())
        assert all("score" not in t for t in doc["terms"])

    def test_tsv_file(self, tmp_path):
        export_map(small_map(with_scores=True), tmp_path / "m.json",
                   tmp_path / "m.tsv")
        lines = (tmp_path / "m.tsv").read_text().splitlines()
        assert lines[0] == "id\tlabel\tx\ty\tweight\tcluster\tscore"
        assert len(lines) == 4
        assert lines[1].split("\t")[1] == "citation analysis"

    def test_tsv_score_column_empty_when_absent(self, tmp_path):
        export_map(small_map(), tmp_path / "m.json", tmp_path / "m.tsv")
        for line in (tmp_path / "m.tsv").read_text().splitlines()[1:]:
            assert line.endswith("\t")

    def test_schema_version_mismatch(self, tmp_path):
        (tmp_path / "bad.json").write_text('{"schema_version": 2, "terms": []}')
        with pytest.raises(FormatError, match="expected 1.*found 2"):
            import_map(tmp_path / "bad.json")

    def test_empty_terms_rejected(self, tmp_path):
        (tmp_path / "empty.json").write_text('{"schema_version": 1, "terms": []}')
        with pytest.raises(ValidationError, match="no terms"):
            import_map(tmp_path / "empty.json")

    def test_mixed_scores_rejected(self, tmp_path):
        doc = {"schema_version": 1, "terms": [
            {"id": 1, "label": "a", "x": 0, "y": 0, "weight": 1, "cluster": 1,
             "score": 1.0},
            {"id": 2, "label": "b", "x": 1, "y": 0, "weight": 1, "cluster": 1},
        ], "clusters": [], "meta": {}}
        (tmp_path / "m.json").write_text(json.dumps(doc))
        with pytest.raises(ValidationError, match="all terms or none"):
            import_map(tmp_path / "m.json")


class TestRenderStatic:
    def test_deterministic_bytes(self):
        tm = small_map()
        for view in ("cluster", "density"):
            assert render_static(tm, view, size=400) == render_static(tm, view, size=400)

    def test_single_term_density(self):
        tm = build_term_map(["alone"], np.array([[0.0, 0.0]]), [5], [1])
        svg = render_static(tm, "density", size=300)
        assert svg.count("<text") == 1
        assert "alone" in svg
        assert "image" in svg  # rasterized field present

    def test_cluster_view_colors_by_palette(self):
        tm = small_map()
        svg = render_static(tm, "cluster", size=400)
        assert CLUSTER_PALETTE[0] in svg
        assert CLUSTER_PALETTE[1] in svg

    def test_three_cluster_fixture_fill_groups(self):
        import re
        labels = [f"term {i:02d}" for i in range(9)]
        # a 3 x 3 grid, far enough apart that no label is occluded
        coords = np.array([[x, y] for x in (-8.0, 0.0, 8.0)
                           for y in (-5.0, 0.0, 5.0)])
        clusters = [1, 1, 1, 2, 2, 2, 3, 3, 3]
        tm = build_term_map(labels, coords, [10] * 9, clusters)
        svg = render_static(tm, "cluster", size=900)
        pairs = re.findall(r'fill="(#\w{6})">(term \d+)</text>', svg)
        by_label = {lab: fill for fill, lab in pairs}
        assert len(by_label) == 9  # nothing occluded in this fixture
        for i, lab in enumerate(labels):
            assert by_label[lab] == cluster_color(clusters[i])
        assert len({by_label[lab] for lab in labels}) == 3

    def test_score_view_colors(self):
        tm = small_map(with_scores=True)
        svg = render_static(tm, "score", size=400)
        assert 'fill="#' in svg

    def test_score_view_requires_scores(self):
        with pytest.raises(ParameterError, match="score"):
            render_static(small_map(), "score", size=400)

    def test_unknown_view(self):
        with pytest.raises(ParameterError):
            render_static(small_map(), "heatmap")

    def test_occlusion_hides_lower_weight(self):
        tm = build_term_map(
            labels=["big term", "small term", "far away"],
            coords=np.array([[0.0, 0.0], [0.001, 0.0], [5.0, 5.0]]),
            weights=[50, 10, 10],
            clusters=[1, 1, 1],
        )
        svg = render_static(tm, "cluster", size=400)
        assert "big term" in svg
        assert "small term" not in svg
        assert "far away" in svg

    def test_occlusion_tie_break_lexicographic(self):
        tm = build_term_map(
            labels=["zebra", "apple", "anchor"],
            coords=np.array([[0.0, 0.0], [0.001, 0.0], [5.0, 5.0]]),
            weights=[10, 10, 10],
            clusters=[1, 1, 1],
        )
        svg = render_static(tm, "cluster", size=400)
        assert "apple" in svg
        assert "zebra" not in svg
        assert svg.count("<text") == 2

    def test_visible_labels_every_kept_exists(self):
        tm = small_map()
        pos = np.array([[10.0, 10.0], [200.0, 200.0], [205.0, 202.0]])
        fonts = np.array([12.0, 12.0, 12.0])
        kept = visible_labels(tm, pos, fonts)
        assert set(kept) <= {0, 1, 2}
        assert 0 in kept  # isolated label always shown

    def test_xml_escaping(self):
        tm = build_term_map(["a<b & c"], np.array([[0.0, 0.0]]), [5], [1])
        svg = render_static(tm, "cluster", size=200)
        assert "a&lt;b &amp; c" in svg

    def test_writes_file(self, tmp_path):
        p = tmp_path / "out.svg"
        render_static(small_map(), "cluster", size=300, path=p)
        assert p.read_text().startswith("<?xml")


def test_palette_has_20_distinct_colors():
    assert len(CLUSTER_PALETTE) == 20
    assert len(set(CLUSTER_PALETTE)) == 20
    assert cluster_color(21) == CLUSTER_PALETTE[0]
