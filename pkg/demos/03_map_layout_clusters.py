"""
Layout and clustering
=====================

Places the selected terms on a plane (similar terms close together) and
partitions them into clusters, both driven by the same association-strength
similarities.
"""
from pathlib import Path

import numpy as np

from termmap import (align, association_strength, build, build_term_map,
                     choose_default_resolution, cluster, export_map,
                     kl_relevance, load_tabular, optimize,
                     phrases_per_document, render_static, second_order,
                     select_top)

DATA = Path(__file__).resolve().parents[1] / "src" / "termmap" / "data"
OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

corpus = load_tabular(DATA / "toy_corpus.tsv",
                      {"id": "id", "title": "title", "abstract": "abstract"})
phrases = phrases_per_document(corpus)
net = build(corpus, phrases, min_occ=2)
selected = select_top(kl_relevance(second_order(net), net), 100)

###############################################################################
# Association strength divides each co-occurrence count by the product of
# the document frequencies: the ratio of observed to expected co-occurrence.

sim = association_strength(net, selected)
print(f"similarity matrix over {len(sim.terms)} terms, "
      f"{sim.a.nnz // 2} positive pairs")

###############################################################################
# The layout minimizes the similarity-weighted sum of squared distances with
# the average pairwise distance pinned to 1.  Ten seeded restarts keep it
# out of poor local minima; `align` rotates the result into a canonical
# orientation so repeated runs are comparable.

weights = [int(net.occ[net.index_of(t)]) for t in sim.terms]
layout = align(optimize(sim, seed=42, restarts=10), weights=weights)
print(f"objective {layout.objective:.4f}; "
      f"average pairwise distance {np.mean(np.linalg.norm(layout.coords[:, None] - layout.coords[None], axis=2)[np.triu_indices(len(sim.terms), 1)]):.6f}")

###############################################################################
# Clustering maximizes sum of (a_ij - resolution) over within-cluster pairs.
# The default resolution (mean positive similarity) is a starting point;
# raise it for more, smaller clusters.

resolution = choose_default_resolution(sim)
clustering = cluster(sim, resolution, seed=43, restarts=20)
n_clusters = int(clustering.assignment.max())
print(f"resolution {resolution:.4f} -> {n_clusters} clusters")
for c in range(1, min(n_clusters, 6) + 1):
    members = [sim.terms[i] for i in np.flatnonzero(clustering.assignment == c)]
    print(f"  cluster {c} ({len(members)} terms): {', '.join(members[:6])}"
          + (" ..." if len(members) > 6 else ""))

###############################################################################
# Assemble the map and write the cluster view plus the JSON/TSV exports.

tm = build_term_map(sim.terms, layout.coords, weights, clustering.assignment,
                    meta={"parameters": {"min_occ": 2, "select": 100,
                                         "resolution": resolution},
                          "seed": 42, "corpus": {"documents": corpus.n_docs},
                          "overlay": "none"})
export_map(tm, OUT / "toy_map.json", OUT / "toy_map.tsv")
render_static(tm, "cluster", size=960, path=OUT / "toy_map_cluster.svg")
print(f"wrote {OUT / 'toy_map.json'}, .tsv and toy_map_cluster.svg")
