"""Term relevance from second-order co-occurrence distributions.

A term's second-order co-occurrences are path counts through intermediate
terms: s_ij = sum over k not in {i, j} of c_ik * c_kj.  Each row of S is
normalized to a distribution p_i and compared against the overall
distribution q (the column mass of S) with the Kullback-Leibler
divergence KL(p_i || q), in nats.  Terms whose second-order distribution
is strongly biased towards particular other terms score high; terms that
co-occur indiscriminately score near zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from .errors import DegenerateNetworkError, ParameterError
from .termnet import CoocNetwork


@dataclass(frozen=True)
class RelevanceScore:
    term: str
    kl: float
    occ: int


@dataclass
class SecondOrder:
    """Row-normalized second-order distributions and the overall distribution.

    Rows with no second-order co-occurrences at all are flagged in
    ``empty_rows`` and carry all-zero rows in P.
    """

    P: sp.csr_matrix
    q: np.ndarray
    empty_rows: np.ndarray


def second_order(net: CoocNetwork) -> SecondOrder:
    """Compute P and q from the co-occurrence counts.

    Because the diagonal of C is zero, the k = i and k = j terms of the
    path sum vanish on their own, so S is exactly C @ C with its diagonal
    forced to zero.
    """
    if len(net) == 0:
        raise DegenerateNetworkError("empty network")
    C = net.to_csr()
    S = (C @ C).tolil()
    S.setdiag(0)
    S = S.tocsr()
    S.eliminate_zeros()
    total = S.sum()
    if total == 0:
        raise DegenerateNetworkError(
            "all second-order co-occurrences are zero; "
            "the network has no paths of length two"
        )
    row_sums = np.asarray(S.sum(axis=1)).ravel()
    empty = row_sums == 0
    inv = np.divide(1.0, row_sums, out=np.zeros_like(row_sums, dtype=float),
                    where=~empty)
    P = sp.diags(inv) @ S.astype(np.float64)
    P = P.tocsr()
    q = np.asarray(S.sum(axis=0)).ravel().astype(np.float64) / float(total)
    return SecondOrder(P=P, q=q, empty_rows=empty)


def kl_relevance(so: SecondOrder, net: CoocNetwork) -> list[RelevanceScore]:
    """KL(p_i || q) per term, natural log; empty rows score 0."""
    P, q = so.P, so.q
    kl = np.zeros(P.shape[0])
    for i in range(P.shape[0]):
        if so.empty_rows[i]:
            continue
        row = P.getrow(i)
        p = row.data
        kl[i] = float(np.sum(p * np.log(p / q[row.indices])))
    return [
        RelevanceScore(term=t, kl=float(kl[i]), occ=int(net.occ[i]))
        for i, t in enumerate(net.terms)
    ]


def _sorted_scores(scores: list[RelevanceScore]) -> list[RelevanceScore]:
    return sorted(scores, key=lambda s: (-s.kl, -s.occ, s.term))


def select_top(scores: list[RelevanceScore], k: int | float) -> list[str]:
    """Pick the k most relevant terms (k an absolute count, or a fraction).

    Ordering is descending KL, ties broken by higher document frequency,
    then lexicographically; the result does not depend on the input order.
    """
    n = len(scores)
    if isinstance(k, bool) or n == 0:
        raise ParameterError("scores must be non-empty and k numeric")
    if isinstance(k, float):
        if not 0 < k <= 1:
            raise ParameterError(f"fraction must be in (0, 1], got {k}")
        k = math.ceil(k * n)
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if k > n:
        raise ParameterError(f"k={k} exceeds the number of scored terms ({n})")
    return [s.term for s in _sorted_scores(scores)[:k]]


def dump_relevance(scores: list[RelevanceScore], path: str | Path) -> None:
    """Write ``term<TAB>occurrences<TAB>kl`` lines, most relevant first."""
    with open(path, "w", encoding="utf-8") as f:
        for s in _sorted_scores(scores):
            f.write(f"{s.term}\t{s.occ}\t{s.kl:.9g}\n")
