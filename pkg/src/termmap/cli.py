"""Command-line pipeline: run everything, or one stage at a time.

Each stage writes a dump into the output directory and later stages read
the dumps back, so ``termmap run`` and the staged subcommands produce
byte-identical map exports given the same configuration and seed.  All
randomness flows from one ``seed``: the layout uses ``seed`` and the
clustering ``seed + 1``.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import corpus as corpus_mod
from . import layout as layout_mod
from . import nlp, overlay, relevance, render, termnet
from .cluster import choose_default_resolution
from .cluster import cluster as cluster_terms
from .errors import FormatError, ParameterError, TermMapError

STAGES = ("extract", "network", "rank", "layout", "cluster", "render")
OVERLAY_MODES = ("none", "density", "score-mean", "subset-share")


@dataclass
class RunConfig:
    input: str | None = None
    format: str = "tsv"
    split: str = "paragraph"
    id_col: str = "id"
    title_col: str = "title"
    abstract_col: str = "abstract"
    score_col: str | None = None
    subset_col: str | None = None
    min_occ: int = 15
    select: int | None = None
    select_frac: float | None = None
    seed: int = 1
    restarts: int = 10
    cluster_restarts: int = 20
    resolution: float | None = None
    min_cluster_size: int = 1
    overlay: str = "none"
    bandwidth: float | None = None
    grid: int = 256
    size: int = 960
    out: str = "."
    # field names set via the config file or flags (not defaults)
    explicit: set = dataclasses.field(default_factory=set, repr=False, compare=False)

    def validate(self) -> None:
        if self.format not in ("tsv", "text"):
            raise ParameterError(f"format must be tsv or text, got {self.format!r}")
        if self.split not in corpus_mod.SPLIT_MODES:
            raise ParameterError(f"split must be one of {corpus_mod.SPLIT_MODES}")
        if self.min_occ < 1:
            raise ParameterError("min_occ must be >= 1")
        if self.select is not None and self.select < 1:
            raise ParameterError("select must be >= 1")
        if self.select_frac is not None and not (0 < self.select_frac <= 1):
            raise ParameterError("select_frac must be in (0, 1]")
        if self.select is not None and self.select_frac is not None:
            raise ParameterError("give either select or select_frac, not both")
        if self.restarts < 1 or self.cluster_restarts < 1:
            raise ParameterError("restarts must be >= 1")
        if self.resolution is not None and self.resolution <= 0:
            raise ParameterError("resolution must be > 0")
        if self.overlay not in OVERLAY_MODES:
            raise ParameterError(f"overlay must be one of {OVERLAY_MODES}")
        if self.bandwidth is not None and self.bandwidth <= 0:
            raise ParameterError("bandwidth must be > 0")
        if self.grid < 1 or self.size < 32:
            raise ParameterError("grid/size out of range")

    def parameters(self) -> dict:
        params = dataclasses.asdict(self)
        params.pop("explicit", None)
        return params


def _parse_config_file(path: str) -> dict:
    """Flat ``key = value`` lines; # starts a comment."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FormatError(f"{path}:{lineno}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        values[key] = val
    return values


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(RunConfig)}


def _coerce(key: str, raw: str):
    t = _FIELD_TYPES.get(key)
    if t is None or key == "explicit":
        raise ParameterError(f"unknown configuration key {key!r}")
    if raw == "" or raw.lower() == "none":
        return None
    if "int" in t:
        return int(raw)
    if "float" in t:
        return float(raw)
    return raw


def build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        for key, raw in _parse_config_file(args.config).items():
            setattr(cfg, key, _coerce(key, raw))
            cfg.explicit.add(key)
    for f in dataclasses.fields(RunConfig):
        if f.name == "explicit":
            continue
        v = getattr(args, f.name, None)
        if v is not None:
            setattr(cfg, f.name, v)
            cfg.explicit.add(f.name)
    cfg.validate()
    return cfg


# ---------------------------------------------------------------------------
# Dump I/O

def _write_json(path: Path, doc) -> None:
    path.write_text(json.dumps(doc, ensure_ascii=False, separators=(",", ":")) + "\n",
                    encoding="utf-8")


def _read_dump(out: Path, name: str, producer: str) -> dict:
    path = out / name
    if not path.exists():
        raise FormatError(
            f"{path} not found; run the {producer!r} stage first")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise FormatError(f"{path} is corrupt (expected output of the "
                          f"{producer!r} stage): {e}") from None


# ---------------------------------------------------------------------------
# Stages

def stage_extract(cfg: RunConfig, out: Path) -> dict:
    if not cfg.input:
        raise ParameterError("--input is required for the extract stage")
    if cfg.format == "tsv":
        column_spec = {"id": cfg.id_col, "title": cfg.title_col}
        with open(cfg.input, encoding="utf-8-sig", newline="") as f:
            header = f.readline().rstrip("\r\n").split("\t")
        # optional roles: a default column name is used only when the file
        # has it; an explicitly mapped column must exist (load_tabular errors)
        for role, col, field in (("abstract", cfg.abstract_col, "abstract_col"),
                                 ("score", cfg.score_col, "score_col"),
                                 ("subset", cfg.subset_col, "subset_col")):
            if col and (field in cfg.explicit or col in header):
                column_spec[role] = col
        corp = corpus_mod.load_tabular(cfg.input, column_spec)
    else:
        corp = corpus_mod.load_plaintext(cfg.input, cfg.split)
    phrases = nlp.phrases_per_document(corp)
    vocabulary = set()
    for ps in phrases.values():
        vocabulary.update(ps)
    doc = {
        "n_docs": corp.n_docs,
        "counts": {"documents": corp.n_docs, "candidate_phrases": len(vocabulary)},
        "docs": [
            {"id": d.id, "score": d.score, "in_subset": d.in_subset,
             "phrases": phrases[d.id]}
            for d in corp
        ],
    }
    _write_json(out / "extract.json", doc)
    return doc


def _corpus_from_extract(doc: dict) -> corpus_mod.Corpus:
    # Rebuild lightweight documents; text is irrelevant downstream.
    return corpus_mod.Corpus(tuple(
        corpus_mod.Document(id=d["id"], text="-", score=d.get("score"),
                            in_subset=d.get("in_subset"))
        for d in doc["docs"]
    ))


def stage_network(cfg: RunConfig, out: Path) -> dict:
    ex = _read_dump(out, "extract.json", "extract")
    corp = _corpus_from_extract(ex)
    phrases = {d["id"]: d["phrases"] for d in ex["docs"]}
    net = termnet.build(corp, phrases, cfg.min_occ)
    doc_sets = termnet.term_doc_sets(corp, phrases, cfg.min_occ)
    doc = {
        "n_docs": net.n_docs,
        "min_occ": cfg.min_occ,
        "counts": {"thresholded_terms": len(net.terms)},
        "terms": [[t, int(o)] for t, o in zip(net.terms, net.occ)],
        "pairs": [[int(i), int(j), int(net.cooc[(i, j)])]
                  for (i, j) in sorted(net.cooc)],
        "doc_sets": {t: sorted(doc_sets[t]) for t in net.terms},
    }
    _write_json(out / "network.json", doc)
    termnet.dump_network(net, out / "terms.tsv", out / "cooc.tsv")
    return doc


def _net_from_dump(doc: dict) -> termnet.CoocNetwork:
    terms = [t for t, _ in doc["terms"]]
    occ = np.array([o for _, o in doc["terms"]], dtype=np.int64)
    cooc = {(i, j): c for i, j, c in doc["pairs"]}
    return termnet.CoocNetwork(terms=terms, occ=occ, cooc=cooc,
                               n_docs=doc["n_docs"])


def stage_rank(cfg: RunConfig, out: Path) -> dict:
    nd = _read_dump(out, "network.json", "network")
    net = _net_from_dump(nd)
    scores = relevance.kl_relevance(relevance.second_order(net), net)
    if cfg.select is not None:
        k: int | float = cfg.select
    elif cfg.select_frac is not None:
        k = float(cfg.select_frac)
    else:
        k = 0.5
    selected = relevance.select_top(scores, k)
    relevance.dump_relevance(scores, out / "relevance.tsv")
    doc = {
        "k": len(selected),
        "counts": {"selected_terms": len(selected)},
        "selected": selected,
    }
    _write_json(out / "rank.json", doc)
    return doc


def _similarity(cfg: RunConfig, out: Path) -> layout_mod.SimilarityMatrix:
    nd = _read_dump(out, "network.json", "network")
    rk = _read_dump(out, "rank.json", "rank")
    net = _net_from_dump(nd)
    return layout_mod.association_strength(net, rk["selected"])


def stage_layout(cfg: RunConfig, out: Path) -> dict:
    sim = _similarity(cfg, out)
    nd = _read_dump(out, "network.json", "network")
    occ = dict(nd["terms"])
    lay = layout_mod.optimize(sim, seed=cfg.seed, restarts=cfg.restarts)
    lay = layout_mod.align(lay, weights=[occ[t] for t in sim.terms])
    doc = {
        "seed": cfg.seed,
        "objective": lay.objective,
        "counts": {"mapped_terms": len(sim.terms)},
        "terms": sim.terms,
        "coords": [[float(x), float(y)] for x, y in lay.coords],
    }
    _write_json(out / "layout.json", doc)
    return doc


def stage_cluster(cfg: RunConfig, out: Path) -> dict:
    sim = _similarity(cfg, out)
    resolution = cfg.resolution
    if resolution is None:
        resolution = choose_default_resolution(sim)
    clu = cluster_terms(sim, resolution, seed=cfg.seed + 1,
                        restarts=cfg.cluster_restarts,
                        min_cluster_size=cfg.min_cluster_size)
    doc = {
        "resolution": resolution,
        "quality": clu.quality,
        "counts": {"clusters": int(clu.assignment.max())},
        "terms": sim.terms,
        "assignment": [int(c) for c in clu.assignment],
    }
    _write_json(out / "clusters.json", doc)
    return doc


def stage_render(cfg: RunConfig, out: Path) -> dict:
    ex = _read_dump(out, "extract.json", "extract")
    nd = _read_dump(out, "network.json", "network")
    ld = _read_dump(out, "layout.json", "layout")
    cd = _read_dump(out, "clusters.json", "cluster")
    if ld["terms"] != cd["terms"]:
        raise FormatError("layout.json and clusters.json disagree on terms; "
                          "re-run the layout and cluster stages")
    occ = dict(nd["terms"])
    terms = ld["terms"]
    meta = {
        "parameters": {
            "min_occ": cfg.min_occ,
            "select": cfg.select,
            "select_frac": cfg.select_frac,
            "restarts": cfg.restarts,
            "cluster_restarts": cfg.cluster_restarts,
            "resolution": cd["resolution"],
            "bandwidth": cfg.bandwidth,
        },
        "seed": cfg.seed,
        "corpus": {
            "documents": ex["counts"]["documents"],
            "candidate_phrases": ex["counts"]["candidate_phrases"],
            "thresholded_terms": nd["counts"]["thresholded_terms"],
            "selected_terms": len(terms),
        },
        "overlay": cfg.overlay,
    }
    tm = overlay.build_term_map(
        labels=terms,
        coords=np.array(ld["coords"], dtype=float),
        weights=[occ[t] for t in terms],
        clusters=cd["assignment"],
        meta=meta,
    )
    if cfg.overlay in ("score-mean", "subset-share"):
        doc_sets = {t: set(nd["doc_sets"][t]) for t in terms}
        if cfg.overlay == "score-mean":
            doc_scores = {d["id"]: d.get("score") for d in ex["docs"]}
            tm = overlay.score_mean(tm, doc_sets, doc_scores)
        else:
            flags = {d["id"]: d.get("in_subset") for d in ex["docs"]}
            tm = overlay.score_subset_share(tm, doc_sets, flags)

    render.export_map(tm, out / "map.json", out / "map.tsv")
    render.render_static(tm, "cluster", size=cfg.size,
                         path=out / "map_cluster.svg")
    render.render_static(tm, "density", size=cfg.size, bandwidth=cfg.bandwidth,
                         grid_size=(cfg.grid, cfg.grid),
                         path=out / "map_density.svg")
    outputs = ["map.json", "map.tsv", "map_cluster.svg", "map_density.svg"]
    if tm.scores is not None:
        render.render_static(tm, "score", size=cfg.size,
                             path=out / "map_score.svg")
        outputs.append("map_score.svg")
    return {"outputs": outputs, "terms": len(tm)}


_STAGE_FUNCS = {
    "extract": stage_extract,
    "network": stage_network,
    "rank": stage_rank,
    "layout": stage_layout,
    "cluster": stage_cluster,
    "render": stage_render,
}


class StageFailure(Exception):
    """Wraps an error with the name of the stage it happened in."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause


def run_pipeline(cfg: RunConfig, out: Path) -> dict:
    """All stages in order, plus the manifest."""
    counts: dict[str, int] = {}
    timings: dict[str, float] = {}
    for stage in STAGES:
        t0 = time.perf_counter()
        try:
            result = _STAGE_FUNCS[stage](cfg, out)
        except (TermMapError, OSError) as e:
            raise StageFailure(stage, e) from e
        timings[stage] = round(time.perf_counter() - t0, 6)
        counts.update(result.get("counts", {}))
    manifest = {
        "parameters": cfg.parameters(),
        "seed": cfg.seed,
        "counts": counts,
        "timings_s": timings,
    }
    _write_json(out / "manifest.json", manifest)
    return manifest


# ---------------------------------------------------------------------------
# Argument parsing

def _add_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key = value configuration file")
    p.add_argument("--input", help="input corpus file or directory")
    p.add_argument("--format", choices=["tsv", "text"])
    p.add_argument("--split", choices=list(corpus_mod.SPLIT_MODES))
    p.add_argument("--id-col", dest="id_col")
    p.add_argument("--title-col", dest="title_col")
    p.add_argument("--abstract-col", dest="abstract_col")
    p.add_argument("--score-col", dest="score_col")
    p.add_argument("--subset-col", dest="subset_col")
    p.add_argument("--min-occ", dest="min_occ", type=int)
    p.add_argument("--select", type=int)
    p.add_argument("--select-frac", dest="select_frac", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--cluster-restarts", dest="cluster_restarts", type=int)
    p.add_argument("--resolution", type=float)
    p.add_argument("--min-cluster-size", dest="min_cluster_size", type=int)
    p.add_argument("--overlay", choices=list(OVERLAY_MODES))
    p.add_argument("--bandwidth", type=float)
    p.add_argument("--grid", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--out", help="output directory")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="termmap",
        description="Turn a document corpus into a 2D term map.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("run",) + STAGES:
        p = sub.add_parser(name)
        _add_flags(p)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    command = args.command
    try:
        cfg = build_config(args)
        out = Path(cfg.out)
        out.mkdir(parents=True, exist_ok=True)
        for stale in out.glob("*.failed"):
            stale.unlink()
    except TermMapError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    stage = command
    try:
        if command == "run":
            run_pipeline(cfg, out)
        else:
            _STAGE_FUNCS[command](cfg, out)
        return 0
    except StageFailure as e:
        stage = e.stage
        cause = e.cause
        print(f"error in stage {stage}: {cause}", file=sys.stderr)
        _mark_failed(out, stage, cause)
        return 1
    except (TermMapError, OSError) as e:
        print(f"error in stage {stage}: {e}", file=sys.stderr)
        _mark_failed(out, stage, e)
        return 1


def _mark_failed(out: Path, stage: str, err: Exception) -> None:
    try:
        (out / f"{stage}.failed").write_text(f"{stage}: {err}\n", encoding="utf-8")
    except OSError:
        pass


if __name__ == "__main__":
    sys.exit(main())
