"""
Co-occurrence network and relevance ranking
===========================================

Builds the term network from the bundled 200-abstract toy corpus and ranks
terms with the Kullback-Leibler relevance measure.  The punchline: terms
with a general meaning ("paper", "new method", "interesting result")
co-occur indiscriminately, so their second-order co-occurrence
distribution looks like the corpus-wide background and their KL score is
tiny.  Topical terms are biased towards their neighborhood and score high.
"""
from pathlib import Path

from termmap import (build, kl_relevance, load_tabular, phrases_per_document,
                     second_order, select_top)

DATA = Path(__file__).resolve().parents[1] / "src" / "termmap" / "data"

corpus = load_tabular(DATA / "toy_corpus.tsv",
                      {"id": "id", "title": "title", "abstract": "abstract",
                       "score": "score", "subset": "subset"})
print(f"loaded {corpus.n_docs} documents")

###############################################################################
# Document frequencies are binary: a phrase counts once per document no
# matter how often it repeats.  Terms below the threshold are dropped before
# any pair counting happens.

phrases = phrases_per_document(corpus)
net = build(corpus, phrases, min_occ=2)
print(f"{len(net.terms)} terms occur in at least 2 documents")
print("most frequent:", [(t, int(o)) for t, o in zip(net.terms[:8], net.occ[:8])])
print()

###############################################################################
# Second-order co-occurrences: paths of length two through an intermediate
# term.  Each term's row is normalized and compared against the overall
# distribution with KL divergence.

so = second_order(net)
scores = kl_relevance(so, net)
ranked = sorted(scores, key=lambda s: (-s.kl, -s.occ, s.term))

print("most relevant (specific vocabulary):")
for s in ranked[:10]:
    print(f"  {s.kl:7.4f}  {s.term}  (in {s.occ} docs)")
print()
print("least relevant (generic vocabulary):")
for s in ranked[-10:]:
    print(f"  {s.kl:7.4f}  {s.term}  (in {s.occ} docs)")
print()

###############################################################################
# Selection keeps the top k (or a fraction); ties break on document
# frequency, then alphabetically, so the choice is reproducible.

selected = select_top(scores, 100)
print(f"selected {len(selected)} map terms; first ten: {selected[:10]}")
