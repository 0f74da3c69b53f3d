"""Term occurrence counting and document-level co-occurrence networks.

Counting is binary per document: a phrase occurring five times in one
document still contributes 1 to its document frequency, and a pair of
phrases co-occurring in a document contributes 1 to their joint count.
Terms below the minimum-occurrence threshold are removed before any
pair counts are computed.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from .errors import EmptyNetworkError, ParameterError, ValidationError


@dataclass
class CoocNetwork:
    """Symmetric document-level co-occurrence counts over thresholded terms.

    ``terms`` are ordered by descending document frequency, ties broken
    lexicographically.  ``cooc`` holds only index pairs (i, j) with i < j
    and a positive count; the diagonal is zero by definition.
    """

    terms: list[str]
    occ: np.ndarray
    cooc: dict[tuple[int, int], int]
    n_docs: int
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self._index = {t: i for i, t in enumerate(self.terms)}

    def __len__(self) -> int:
        return len(self.terms)

    def index_of(self, term: str) -> int:
        return self._index[term]

    def cooc_count(self, i: int, j: int) -> int:
        if i == j:
            return 0
        if i > j:
            i, j = j, i
        return self.cooc.get((i, j), 0)

    def to_csr(self) -> sp.csr_matrix:
        """Full symmetric co-occurrence matrix as int64 CSR."""
        n = len(self.terms)
        if not self.cooc:
            return sp.csr_matrix((n, n), dtype=np.int64)
        rows, cols, vals = [], [], []
        for (i, j), c in self.cooc.items():
            rows.extend((i, j))
            cols.extend((j, i))
            vals.extend((c, c))
        return sp.csr_matrix(
            (np.asarray(vals, dtype=np.int64), (rows, cols)), shape=(n, n)
        )

    def validate(self) -> None:
        n = len(self.terms)
        if self.occ.shape != (n,):
            raise ValidationError("occ length does not match term count")
        for (i, j), c in self.cooc.items():
            if not (0 <= i < j < n):
                raise ValidationError(f"bad index pair {(i, j)}")
            if not (0 < c <= min(self.occ[i], self.occ[j]) <= self.n_docs):
                raise ValidationError(
                    f"count bound violated for pair {(i, j)}: c={c}, "
                    f"occ=({self.occ[i]}, {self.occ[j]}), n_docs={self.n_docs}"
                )


def _doc_frequencies(corpus, phrases_per_doc) -> Counter:
    doc_ids = {doc.id for doc in corpus}
    if set(phrases_per_doc) != doc_ids:
        raise ValidationError(
            "phrases_per_doc keys do not match the corpus document ids"
        )
    df: Counter = Counter()
    for doc in corpus:
        df.update(set(phrases_per_doc[doc.id]))
    return df


def build(corpus, phrases_per_doc: dict[str, list[str]], min_occ: int) -> CoocNetwork:
    """Count document frequencies, threshold, and build the pair counts."""
    if min_occ < 1:
        raise ParameterError(f"min_occ must be >= 1, got {min_occ}")
    df = _doc_frequencies(corpus, phrases_per_doc)
    kept = [t for t, c in df.items() if c >= min_occ]
    if not kept:
        raise EmptyNetworkError(
            f"no term occurs in at least {min_occ} documents"
        )
    terms = sorted(kept, key=lambda t: (-df[t], t))
    index = {t: i for i, t in enumerate(terms)}
    occ = np.array([df[t] for t in terms], dtype=np.int64)

    cooc: Counter = Counter()
    for doc in corpus:
        present = sorted({index[p] for p in phrases_per_doc[doc.id] if p in index})
        for pair in combinations(present, 2):
            cooc[pair] += 1

    return CoocNetwork(terms=terms, occ=occ, cooc=dict(cooc), n_docs=corpus.n_docs)


def term_doc_sets(corpus, phrases_per_doc: dict[str, list[str]],
                  min_occ: int) -> dict[str, frozenset[str]]:
    """Exact document sets per surviving term; |set| equals the term's o_i."""
    if min_occ < 1:
        raise ParameterError(f"min_occ must be >= 1, got {min_occ}")
    df = _doc_frequencies(corpus, phrases_per_doc)
    sets: dict[str, set[str]] = {t: set() for t, c in df.items() if c >= min_occ}
    for doc in corpus:
        for p in set(phrases_per_doc[doc.id]):
            if p in sets:
                sets[p].add(doc.id)
    return {t: frozenset(s) for t, s in sets.items()}


def dump_network(net: CoocNetwork, terms_path: str | Path,
                 pairs_path: str | Path) -> None:
    """Write the plain-text network dumps: one term or pair per line."""
    with open(terms_path, "w", encoding="utf-8") as f:
        for t, o in zip(net.terms, net.occ):
            f.write(f"{t}\t{int(o)}\n")
    with open(pairs_path, "w", encoding="utf-8") as f:
        for (i, j) in sorted(net.cooc):
            f.write(f"{net.terms[i]}\t{net.terms[j]}\t{net.cooc[(i, j)]}\n")
