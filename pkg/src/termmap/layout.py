"""Co-occurrence-weighted 2D layout.

Similarities are association strengths a_ij = c_ij / (o_i * o_j), the
ratio of observed to (proportionally) expected co-occurrence.  The layout
minimizes

    V(x) = sum over i<j of a_ij * ||x_i - x_j||^2

subject to the average of all pairwise distances being 1.  V is
homogeneous of degree 2 in the coordinates and the constraint of degree
1, so the problem is equivalent to minimizing the scale-free objective
V(x) / D(x)^2 with D the average pairwise distance.  The optimizer does
gradient descent on that quotient (the plain gradient of V alone is
radial at symmetric configurations and would be cancelled by the
rescaling) with Barzilai-Borwein step sizes, halving the step whenever it
would increase the objective, and rescaling exactly to D = 1 after every
accepted step.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components
from scipy.spatial.distance import cdist, pdist, squareform

from .errors import (ConvergenceWarning, DegenerateNetworkError,
                     DisconnectedWarning, ParameterError)
from .termnet import CoocNetwork

MAX_ITERATIONS = 10_000
REL_TOL = 1e-9
EXACT_PAIR_LIMIT = 2_000
SAMPLED_PAIRS = 2_000_000


@dataclass
class SimilarityMatrix:
    """Symmetric non-negative similarities over the mapped terms."""

    terms: list[str]
    a: sp.csr_matrix

    def positive_pairs(self):
        """Yield (i, j, a_ij) for the upper triangle, positive entries only."""
        coo = sp.triu(self.a, k=1).tocoo()
        for i, j, v in zip(coo.row, coo.col, coo.data):
            if v > 0:
                yield int(i), int(j), float(v)


@dataclass
class Layout2D:
    coords: np.ndarray
    objective: float
    seed: int


def association_strength(net: CoocNetwork, selected: list[str]) -> SimilarityMatrix:
    """Similarity matrix a_ij = c_ij / (o_i * o_j) over the selected terms.

    Terms are re-ordered canonically (descending document frequency, then
    lexicographic).  If the graph of positive similarities is
    disconnected, only the largest component is kept and a
    DisconnectedWarning lists the dropped terms.
    """
    if not selected:
        raise ParameterError("selected term list is empty")
    if len(set(selected)) != len(selected):
        raise ParameterError("selected terms contain duplicates")
    missing = [t for t in selected if t not in net._index]
    if missing:
        raise ParameterError(f"terms not in network: {missing[:5]}")

    terms = sorted(selected, key=lambda t: (-net.occ[net.index_of(t)], t))
    local = {t: i for i, t in enumerate(terms)}
    net_idx = [net.index_of(t) for t in terms]
    in_sel = {g: local[t] for g, t in zip(net_idx, terms)}

    rows, cols, vals = [], [], []
    for (gi, gj), c in net.cooc.items():
        li = in_sel.get(gi)
        lj = in_sel.get(gj)
        if li is None or lj is None:
            continue
        a = c / (float(net.occ[gi]) * float(net.occ[gj]))
        rows.extend((li, lj))
        cols.extend((lj, li))
        vals.extend((a, a))
    n = len(terms)
    A = sp.csr_matrix((vals, (rows, cols)), shape=(n, n))

    n_comp, labels = connected_components(A, directed=False)
    if n_comp > 1:
        sizes = np.bincount(labels, minlength=n_comp)
        best = max(range(n_comp), key=lambda c: (sizes[c], -min(
            i for i in range(n) if labels[i] == c)))
        keep = [i for i in range(n) if labels[i] == best]
        dropped = [terms[i] for i in range(n) if labels[i] != best]
        warnings.warn(
            f"similarity graph is disconnected; dropping {len(dropped)} "
            f"term(s) outside the largest component: {', '.join(sorted(dropped))}",
            DisconnectedWarning,
            stacklevel=2,
        )
        A = A[np.ix_(keep, keep)].tocsr()
        terms = [terms[i] for i in keep]

    if A.nnz == 0 or A.sum() <= 0:
        raise DegenerateNetworkError("no positive similarities between selected terms")
    return SimilarityMatrix(terms=terms, a=A)


# ---------------------------------------------------------------------------
# Optimizer internals

def _center(X: np.ndarray) -> np.ndarray:
    return X - X.mean(axis=0)


def _objective(X: np.ndarray, rows, cols, vals) -> float:
    d = X[rows] - X[cols]
    return float(np.sum(vals * (d * d).sum(axis=1)))


def _pair_sample(n: int, rng: np.random.Generator):
    i = rng.integers(0, n, size=SAMPLED_PAIRS)
    j = rng.integers(0, n - 1, size=SAMPLED_PAIRS)
    j = np.where(j >= i, j + 1, j)
    return i, j


def _avg_distance(X: np.ndarray, sample=None) -> float:
    if sample is None:
        return float(pdist(X).mean())
    i, j = sample
    return float(np.linalg.norm(X[i] - X[j], axis=1).mean())


def _normalize(X: np.ndarray, rng: np.random.Generator, sample=None):
    """Center, break exact coincidences with 1e-9 jitter, rescale to D = 1.

    Returns the rescaled coordinates and, when distances were computed
    exactly, the matching condensed distance array (for gradient reuse).
    """
    X = _center(X)
    if sample is None:
        d = pdist(X)
        while (d == 0.0).any():
            dist = np.sqrt(((X[:, None, :] - X[None, :, :]) ** 2).sum(-1))
            np.fill_diagonal(dist, np.inf)
            bad = np.unique(np.nonzero(dist == 0.0)[0])
            X = X.copy()
            X[bad] += rng.normal(scale=1e-9, size=(bad.size, 2))
            d = pdist(X)
        m = d.mean()
        return X / m, d / m
    return X / _avg_distance(X, sample), None


def _grad_avg_distance(X: np.ndarray, condensed=None) -> np.ndarray:
    # Row i of the gradient is sum_j (x_i - x_j) / d_ij, which factors into
    # x_i * sum_j w_ij - sum_j w_ij x_j with w_ij = 1 / d_ij, so one matmul.
    n = len(X)
    dist = squareform(condensed) if condensed is not None else cdist(X, X)
    np.fill_diagonal(dist, 1.0)
    # coincident pairs are jittered in _normalize; the floor only guards the
    # sampled-constraint path, where that check is skipped
    np.maximum(dist, 1e-30, out=dist)
    W = 1.0 / dist
    np.fill_diagonal(W, 0.0)
    s = W.sum(axis=1)
    return (X * s[:, None] - W @ X) / (n * (n - 1) / 2.0)


def _optimize_once(A: sp.csr_matrix, rng: np.random.Generator):
    n = A.shape[0]
    coo = sp.triu(A, k=1).tocoo()
    rows, cols, vals = coo.row, coo.col, coo.data
    L = sp.diags(np.asarray(A.sum(axis=1)).ravel()) - A
    sample = None if n <= EXACT_PAIR_LIMIT else _pair_sample(n, rng)

    X, dists = _normalize(rng.uniform(-0.5, 0.5, size=(n, 2)), rng, sample)
    V = _objective(X, rows, cols, vals)

    # Step size: Barzilai-Borwein from the previous step and gradient,
    # safeguarded by halving whenever a step would increase the objective.
    eta = 0.25 / float(np.asarray(A.sum(axis=1)).ravel().max())
    X_prev = g_prev = None
    converged = False
    for _ in range(MAX_ITERATIONS):
        g = 2.0 * (L @ X) - 2.0 * V * _grad_avg_distance(X, dists)
        if X_prev is not None:
            dx = (X - X_prev).ravel()
            dg = (g - g_prev).ravel()
            denom = float(dx @ dg)
            if denom > 0:
                eta = float(dx @ dx) / denom
        accepted = False
        while eta > 1e-18:
            Xn, dn = _normalize(X - eta * g, rng, sample)
            Vn = _objective(Xn, rows, cols, vals)
            if Vn < V:
                accepted = True
                break
            eta *= 0.5
        if not accepted:
            converged = True
            break
        X_prev, g_prev = X, g
        rel = (V - Vn) / max(V, 1e-300)
        X, V, dists = Xn, Vn, dn
        if rel < REL_TOL:
            converged = True
            break

    # Final exact pass: recenter and restore the constraint exactly.
    X = _center(X)
    X /= _avg_distance(X)
    V = _objective(X, rows, cols, vals)
    return X, V, converged


def optimize(sim: SimilarityMatrix, seed: int, restarts: int = 10) -> Layout2D:
    """Best layout over seeded restarts; deterministic for (seed, restarts)."""
    n = len(sim.terms)
    if n < 2:
        raise ParameterError(f"layout needs at least 2 terms, got {n}")
    if restarts < 1:
        raise ParameterError(f"restarts must be >= 1, got {restarts}")
    best = None
    any_unconverged = False
    for r in range(restarts):
        rng = np.random.default_rng([seed, r])
        X, V, ok = _optimize_once(sim.a, rng)
        any_unconverged |= not ok
        if best is None or V < best[1]:
            best = (X, V)
    if any_unconverged:
        warnings.warn(
            f"layout hit the iteration cap ({MAX_ITERATIONS}) before the "
            f"relative objective change fell below {REL_TOL}; "
            "returning the best iterate",
            ConvergenceWarning,
            stacklevel=2,
        )
    return Layout2D(coords=best[0], objective=best[1], seed=seed)


def align(layout: Layout2D, weights=None) -> Layout2D:
    """Canonical orientation: principal axis horizontal, reflections fixed.

    The anchor term (highest weight; ties to the lowest index) ends up
    with non-negative y and non-negative x, so mirrored inputs collapse
    to the same output.  A rigid motion, so the objective is unchanged.
    """
    X = _center(layout.coords.copy())
    n = len(X)
    anchor = 0
    if weights is not None:
        w = np.asarray(weights)
        if w.shape[0] != n:
            raise ParameterError("weights length does not match layout size")
        anchor = int(np.argmax(w))

    cov = (X.T @ X) / n
    eigvals, eigvecs = np.linalg.eigh(cov)
    # eigh returns ascending order; principal axis becomes x.
    R = eigvecs[:, ::-1]
    X = X @ R

    def _flip_sign(col: int) -> float:
        v = X[anchor, col]
        if v != 0:
            return -1.0 if v < 0 else 1.0
        nz = np.nonzero(X[:, col])[0]
        if nz.size and X[nz[0], col] < 0:
            return -1.0
        return 1.0

    X[:, 0] *= _flip_sign(0)
    X[:, 1] *= _flip_sign(1)
    return Layout2D(coords=X, objective=layout.objective, seed=layout.seed)
