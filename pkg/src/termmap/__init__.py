"""termmap: turn a corpus of English documents into a 2D term map.

The pipeline: extract noun phrases, rank them by the Kullback-Leibler
distance between each term's second-order co-occurrence distribution and
the corpus-wide one, place the selected terms on a plane so distance
reflects co-occurrence, cluster them, and render or export the result.
"""

from .corpus import Corpus, Document, load_plaintext, load_tabular
from .nlp import (NounPhrase, TaggedToken, chunk, extract_phrases,
                  phrases_per_document, singularize, tag, tokenize)
from .termnet import CoocNetwork, build, dump_network, term_doc_sets
from .relevance import (RelevanceScore, SecondOrder, dump_relevance,
                        kl_relevance, second_order, select_top)
from .layout import (Layout2D, SimilarityMatrix, align, association_strength,
                     optimize)
from .cluster import Clustering, choose_default_resolution, cluster, quality
from .overlay import (DensityField, TermMap, build_term_map, color_scale,
                      density, density_at, default_bandwidth, score_mean,
                      score_subset_share)
from .render import (cluster_color, export_map, import_map, render_static,
                     visible_labels)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "Corpus", "Document", "load_plaintext", "load_tabular",
    "NounPhrase", "TaggedToken", "chunk", "extract_phrases",
    "phrases_per_document", "singularize", "tag", "tokenize",
    "CoocNetwork", "build", "dump_network", "term_doc_sets",
    "RelevanceScore", "SecondOrder", "dump_relevance", "kl_relevance",
    "second_order", "select_top",
    "Layout2D", "SimilarityMatrix", "align", "association_strength",
    "optimize",
    "Clustering", "choose_default_resolution", "cluster", "quality",
    "DensityField", "TermMap", "build_term_map", "color_scale", "density",
    "density_at", "default_bandwidth", "score_mean", "score_subset_share",
    "cluster_color", "export_map", "import_map", "render_static",
    "visible_labels",
    "errors",
]
