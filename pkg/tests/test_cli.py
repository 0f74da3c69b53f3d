import json
from pathlib import Path

import pytest

from termmap.cli import main


def run_cli(*args):
    return main([str(a) for a in args])


def toy_args(toy_corpus_path, out, **over):
    args = {
        "--input": toy_corpus_path, "--format": "tsv",
        "--score-col": "score", "--subset-col": "subset",
        "--min-occ": 2, "--select": 100, "--seed": 7, "--restarts": 3,
        "--cluster-restarts": 5, "--grid": 64, "--size": 480,
        "--out": out,
    }
    args.update(over)
    flat = []
    for k, v in args.items():
        flat.extend([k, v])
    return flat


@pytest.fixture(scope="module")
def toy_run(toy_corpus_path, tmp_path_factory):
    out = tmp_path_factory.mktemp("run")
    code = run_cli("run", *toy_args(toy_corpus_path, out))
    assert code == 0
    return out


def test_run_outputs_and_manifest(toy_run):
    for name in ("extract.json", "network.json", "rank.json", "relevance.tsv",
                 "layout.json", "clusters.json", "map.json", "map.tsv",
                 "map_cluster.svg", "map_density.svg", "manifest.json",
                 "terms.tsv", "cooc.tsv"):
        assert (toy_run / name).exists(), name
    manifest = json.loads((toy_run / "manifest.json").read_text())
    counts = manifest["counts"]
    assert counts["documents"] == 200
    assert counts["selected_terms"] == 100
    assert counts["selected_terms"] <= counts["thresholded_terms"] \
        <= counts["candidate_phrases"]
    assert set(manifest["timings_s"]) == {"extract", "network", "rank",
                                          "layout", "cluster", "render"}


def test_run_twice_byte_identical_export(toy_corpus_path, toy_run,
                                         tmp_path_factory):
    out2 = tmp_path_factory.mktemp("run2")
    assert run_cli("run", *toy_args(toy_corpus_path, out2)) == 0
    assert (toy_run / "map.json").read_bytes() == (out2 / "map.json").read_bytes()
    assert (toy_run / "map.tsv").read_bytes() == (out2 / "map.tsv").read_bytes()
    assert (toy_run / "map_cluster.svg").read_bytes() == \
        (out2 / "map_cluster.svg").read_bytes()


def test_staged_equals_one_shot(toy_corpus_path, toy_run, tmp_path_factory):
    out = tmp_path_factory.mktemp("staged")
    for stage in ("extract", "network", "rank", "layout", "cluster", "render"):
        code = run_cli(stage, *toy_args(toy_corpus_path, out))
        assert code == 0, stage
    assert (out / "map.json").read_bytes() == (toy_run / "map.json").read_bytes()


def test_score_overlay_run(toy_corpus_path, tmp_path):
    code = run_cli("run", *toy_args(toy_corpus_path, tmp_path,
                                    **{"--overlay": "score-mean"}))
    assert code == 0
    doc = json.loads((tmp_path / "map.json").read_text())
    assert all("score" in t for t in doc["terms"])
    assert (tmp_path / "map_score.svg").exists()
    assert doc["meta"]["overlay"] == "score-mean"


def test_subset_share_overlay(toy_corpus_path, tmp_path):
    code = run_cli("run", *toy_args(toy_corpus_path, tmp_path,
                                    **{"--overlay": "subset-share"}))
    assert code == 0
    doc = json.loads((tmp_path / "map.json").read_text())
    scores = [t["score"] for t in doc["terms"]]
    assert all(0.0 <= s <= 1.0 for s in scores)


def test_stage_missing_dump_fails_with_marker(tmp_path, capsys):
    code = run_cli("network", "--out", tmp_path, "--min-occ", 2)
    assert code == 1
    err = capsys.readouterr().err
    assert "network" in err and "extract" in err
    assert (tmp_path / "network.failed").exists()


def test_invalid_parameter_rejected(toy_corpus_path, tmp_path, capsys):
    code = run_cli("run", "--input", toy_corpus_path, "--min-occ", 0,
                   "--out", tmp_path)
    assert code == 1
    assert "min_occ" in capsys.readouterr().err


def test_failed_marker_on_stage_error(toy_corpus_path, tmp_path, capsys):
    # threshold too high for the toy corpus -> network stage fails
    code = run_cli("run", *toy_args(toy_corpus_path, tmp_path,
                                    **{"--min-occ": 5000}))
    assert code == 1
    assert (tmp_path / "network.failed").exists()
    assert "network" in capsys.readouterr().err
    # extract output retained
    assert (tmp_path / "extract.json").exists()


def test_config_file_and_flag_override(toy_corpus_path, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        f"input = {toy_corpus_path}\n"
        "format = tsv\n"
        "min_occ = 2\n"
        "select = 50\n"
        "seed = 7\n"
        "restarts = 2\n"
        "cluster_restarts = 3\n"
        "grid = 48\n"
        "# a comment\n"
    )
    out = tmp_path / "out"
    code = run_cli("run", "--config", cfg, "--select", 60, "--out", out)
    assert code == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["counts"]["selected_terms"] == 60  # flag wins
    assert manifest["parameters"]["min_occ"] == 2      # file value used


def test_select_frac(toy_corpus_path, tmp_path):
    code = run_cli("run", *toy_args(toy_corpus_path, tmp_path),
                   "--select-frac", 0.25)
    assert code == 1  # both select and select_frac given


def test_score_overlay_without_scores_fails_in_render(tmp_path, capsys):
    # corpus without a score column, but a score overlay requested:
    # the render stage must fail naming the missing document score
    src = tmp_path / "c.tsv"
    src.write_text(
        "id\ttitle\n"
        "p1\tCitation analysis and impact factor studies\n"
        "p2\tCitation analysis with the impact factor\n"
        "p3\tThe impact factor in citation analysis\n"
    )
    out = tmp_path / "out"
    code = run_cli("run", "--input", src, "--min-occ", 2, "--select", 2,
                   "--seed", 1, "--restarts", 2, "--cluster-restarts", 2,
                   "--grid", 32, "--overlay", "score-mean", "--out", out)
    assert code == 1
    err = capsys.readouterr().err
    assert "render" in err
    assert (out / "render.failed").exists()


def test_plaintext_input(tmp_path):
    doc = tmp_path / "thesis.txt"
    doc.write_text(
        "Citation analysis studies the impact factor of journals. "
        "The impact factor matters.\n\n"
        "Citation analysis and the impact factor appear again here. "
        "Science mapping uses citation analysis.\n\n"
        "The impact factor and science mapping conclude the text.\n"
    )
    out = tmp_path / "out"
    code = run_cli("run", "--input", doc, "--format", "text",
                   "--split", "paragraph", "--min-occ", 2, "--select", 3,
                   "--seed", 1, "--restarts", 2, "--cluster-restarts", 2,
                   "--grid", 32, "--out", out)
    assert code == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["counts"]["documents"] == 3
