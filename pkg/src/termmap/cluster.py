"""Resolution-parameterized clustering on the similarity matrix.

The quality of a partition c is

    Q(c) = sum over pairs i<j in the same cluster of (a_ij - gamma)

so every within-cluster pair pays the resolution gamma and earns its
similarity.  Higher gamma prices cluster membership higher and yields
more, smaller clusters.  Q is maximized heuristically by local moving
(nodes greedily switch to the best cluster, including a fresh singleton,
in seeded random order until no move helps) with cluster-level
aggregation and a final refinement pass at the term level.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import ParameterError
from .layout import SimilarityMatrix


@dataclass
class Clustering:
    """Per-term cluster ids, 1..K with no gaps, largest cluster first."""

    assignment: np.ndarray
    resolution: float
    quality: float


def quality(sim: SimilarityMatrix, assignment: np.ndarray, resolution: float) -> float:
    """Recompute Q(c) from scratch: within-cluster similarity minus the
    gamma charge on every within-cluster pair."""
    assignment = np.asarray(assignment)
    coo = sp.triu(sim.a, k=1).tocoo()
    same = assignment[coo.row] == assignment[coo.col]
    within = float(coo.data[same].sum())
    _, counts = np.unique(assignment, return_counts=True)
    pairs = float((counts * (counts - 1) // 2).sum())
    return within - resolution * pairs


def _local_move(A: sp.csr_matrix, sizes: np.ndarray, comm: np.ndarray,
                gamma: float, rng: np.random.Generator) -> np.ndarray:
    """Greedy node moves until a full pass changes nothing."""
    n = A.shape[0]
    comm = comm.copy()
    csize = np.zeros(comm.max() + n + 2)
    np.add.at(csize, comm, sizes)
    next_label = comm.max() + 1
    indptr, indices, data = A.indptr, A.indices, A.data

    improved = True
    while improved:
        improved = False
        for v in rng.permutation(n):
            own = comm[v]
            s_v = sizes[v]
            # similarity of v to each neighboring cluster
            w: dict[int, float] = {}
            for p in range(indptr[v], indptr[v + 1]):
                u = indices[p]
                if u == v:
                    continue
                cu = comm[u]
                w[cu] = w.get(cu, 0.0) + data[p]
            # gain of staying computed as: remove v, then re-add
            base = w.get(own, 0.0) - gamma * s_v * (csize[own] - s_v)
            best_gain, best_c = 0.0, None  # 0.0 == move to a fresh singleton
            for c, wc in w.items():
                if c == own:
                    continue
                gain = wc - gamma * s_v * csize[c]
                if gain > best_gain + 1e-12 or (
                        abs(gain - best_gain) <= 1e-12 and best_c is not None
                        and c < best_c):
                    best_gain, best_c = gain, c
            if best_gain > base + 1e-12:
                csize[own] -= s_v
                if best_c is None:
                    best_c = next_label
                    if best_c >= len(csize):
                        csize = np.concatenate([csize, np.zeros(n + 1)])
                    next_label += 1
                csize[best_c] += s_v
                comm[v] = best_c
                improved = True
    return comm


def _compact(comm: np.ndarray) -> np.ndarray:
    _, compacted = np.unique(comm, return_inverse=True)
    return compacted


def _aggregate(A: sp.csr_matrix, sizes: np.ndarray, comm: np.ndarray):
    k = comm.max() + 1
    P = sp.csr_matrix(
        (np.ones(len(comm)), (np.arange(len(comm)), comm)), shape=(len(comm), k)
    )
    A2 = (P.T @ A @ P).tocsr()
    A2.setdiag(0)
    A2.eliminate_zeros()
    sizes2 = np.zeros(k, dtype=sizes.dtype)
    np.add.at(sizes2, comm, sizes)
    return A2, sizes2


def _cluster_once(A: sp.csr_matrix, gamma: float, rng: np.random.Generator,
                  init: np.ndarray | None = None) -> np.ndarray:
    """One multilevel run: local moving, aggregation while it merges,
    then a refinement pass at the term level.

    ``init`` seeds the first local-moving pass; singletons reproduce the
    classic greedy, random partitions diversify the restarts (the greedy
    sink from singletons is the same for many node orders).
    """
    n = A.shape[0]
    if init is None:
        init = np.arange(n)
    membership = _compact(_local_move(A, np.ones(n, dtype=np.int64),
                                      init, gamma, rng))
    level_A, level_sizes = _aggregate(A, np.ones(n, dtype=np.int64), membership)
    while True:
        m = level_A.shape[0]
        comm = _compact(_local_move(level_A, level_sizes,
                                    np.arange(m), gamma, rng))
        membership = comm[membership]
        if comm.max() + 1 == m:
            break
        level_A, level_sizes = _aggregate(level_A, level_sizes, comm)
    # refinement at the term level, starting from the aggregated partition
    final = _local_move(A, np.ones(n, dtype=np.int64), membership, gamma, rng)
    return _compact(final)


def _relabel(terms: list[str], comm: np.ndarray) -> np.ndarray:
    """1-based ids ordered by descending size; ties by the lexicographically
    smallest member term."""
    groups: dict[int, list[str]] = {}
    for t, c in zip(terms, comm):
        groups.setdefault(int(c), []).append(t)
    order = sorted(groups, key=lambda c: (-len(groups[c]), min(groups[c])))
    new_id = {c: i + 1 for i, c in enumerate(order)}
    return np.array([new_id[int(c)] for c in comm], dtype=np.int64)


def cluster(sim: SimilarityMatrix, resolution: float, seed: int,
            restarts: int = 20, min_cluster_size: int = 1) -> Clustering:
    """Best partition over seeded restarts; deterministic for (seed, restarts)."""
    if resolution <= 0:
        raise ParameterError(f"resolution must be > 0, got {resolution}")
    if restarts < 1:
        raise ParameterError(f"restarts must be >= 1, got {restarts}")
    if min_cluster_size < 1:
        raise ParameterError(
            f"min_cluster_size must be >= 1, got {min_cluster_size}")

    n = sim.a.shape[0]
    best_comm, best_q = None, -np.inf
    for r in range(restarts):
        rng = np.random.default_rng([seed, r])
        if r == 0:
            init = None  # classic greedy from singletons
        else:
            k = int(rng.integers(1, n + 1))
            init = rng.integers(0, k, size=n)
        comm = _cluster_once(sim.a, resolution, rng, init=init)
        q = quality(sim, comm, resolution)
        if q > best_q:
            best_comm, best_q = comm, q

    if min_cluster_size > 1:
        best_comm = _merge_small(sim, best_comm, min_cluster_size)
        best_q = quality(sim, best_comm, resolution)

    assignment = _relabel(sim.terms, best_comm)
    return Clustering(assignment=assignment, resolution=float(resolution),
                      quality=float(best_q))


def _merge_small(sim: SimilarityMatrix, comm: np.ndarray, min_size: int) -> np.ndarray:
    """Fold clusters below min_size into their best-connected neighbor."""
    comm = comm.copy()
    while True:
        labels, counts = np.unique(comm, return_counts=True)
        if len(labels) < 2:
            return comm
        small = [c for c, n in zip(labels, counts) if n < min_size]
        if not small:
            return comm
        c = small[0]
        members = np.nonzero(comm == c)[0]
        weights: dict[int, float] = {}
        sub = sim.a[members]
        for row in range(sub.shape[0]):
            start, end = sub.indptr[row], sub.indptr[row + 1]
            for u, val in zip(sub.indices[start:end], sub.data[start:end]):
                cu = int(comm[u])
                if cu != c:
                    weights[cu] = weights.get(cu, 0.0) + float(val)
        if weights:
            target = max(sorted(weights), key=lambda k: weights[k])
        else:
            # no connection at all: fold into the largest other cluster
            others = [(n, l) for l, n in zip(labels, counts) if l != c]
            target = max(others)[1]
        comm[members] = target


def choose_default_resolution(sim: SimilarityMatrix) -> float:
    """Mean of the positive similarities; a starting point, not an answer."""
    vals = sp.triu(sim.a, k=1).tocoo().data
    vals = vals[vals > 0]
    if vals.size == 0:
        raise ParameterError("similarity matrix has no positive entries")
    return float(vals.mean())
