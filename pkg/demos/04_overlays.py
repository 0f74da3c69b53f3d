"""
Density and score overlays
==========================

Three ways to color the same map: kernel density of terms, mean document
score per term (think citations), and the share of a term's documents that
belong to a subset (think one institution's output).
"""
from pathlib import Path

from termmap import (align, association_strength, build, build_term_map,
                     choose_default_resolution, cluster, color_scale, density,
                     kl_relevance, load_tabular, optimize,
                     phrases_per_document, render_static, score_mean,
                     score_subset_share, second_order, select_top,
                     term_doc_sets)

DATA = Path(__file__).resolve().parents[1] / "src" / "termmap" / "data"
OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

corpus = load_tabular(DATA / "toy_corpus.tsv",
                      {"id": "id", "title": "title", "abstract": "abstract",
                       "score": "score", "subset": "subset"})
phrases = phrases_per_document(corpus)
net = build(corpus, phrases, min_occ=2)
selected = select_top(kl_relevance(second_order(net), net), 100)
sim = association_strength(net, selected)
weights = [int(net.occ[net.index_of(t)]) for t in sim.terms]
layout = align(optimize(sim, seed=42, restarts=10), weights=weights)
clustering = cluster(sim, choose_default_resolution(sim), seed=43, restarts=20)
tm = build_term_map(sim.terms, layout.coords, weights, clustering.assignment)

###############################################################################
# The density field: a weight-scaled Gaussian at every term, normalized so
# the hottest cell is exactly 1, colored blue -> green -> yellow -> red.

field = density(tm, grid_size=(256, 256))
print(f"density grid {field.grid.shape}, bandwidth {field.bandwidth:.4f}, "
      f"peak {field.grid.max():.1f}")
render_static(tm, "density", size=960, path=OUT / "toy_map_density.svg")

###############################################################################
# Mean-score overlay: average the document scores behind each term.  The
# toy corpus gives bibliometrics-flavored documents higher synthetic
# citation counts, so that corner of the map runs red.

sets = term_doc_sets(corpus, phrases, min_occ=2)
scored = score_mean(tm, sets, {d.id: d.score for d in corpus})
render_static(scored, "score", size=960, path=OUT / "toy_map_citations.svg")
top = sorted(zip(scored.labels, scored.scores), key=lambda x: -x[1])[:5]
print("highest mean-score terms:", [(t, round(s, 1)) for t, s in top])

###############################################################################
# Subset-share overlay: what fraction of each term's documents carries the
# flag.  Shares live in [0, 1] by construction.

flagged = score_subset_share(tm, sets, {d.id: d.in_subset for d in corpus})
render_static(flagged, "score", size=960, path=OUT / "toy_map_subset.svg")
print("subset share range: "
      f"{flagged.scores.min():.2f} .. {flagged.scores.max():.2f}")

###############################################################################
# The color ramp itself is fixed and documented; score mode stretches the
# 10th..90th percentile of the values across it and clamps outside.

for v in (0.0, 1 / 6, 1 / 3, 0.5, 2 / 3, 5 / 6, 1.0):
    print(f"  ramp({v:.3f}) = {color_scale([v], 'density')[0]}")
print(f"wrote density/citations/subset SVGs to {OUT}")
