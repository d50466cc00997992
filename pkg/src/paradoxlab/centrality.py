"""Centrality measures: degree, walk counts, eigenvector, Katz, PageRank,
plus closeness/harmonic for comparison tables.

All iterative solvers stop on explicit residuals, never on iteration
plateaus, and report the residual and iteration count they achieved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (ConvergenceError, ParameterError, PreconditionError,
                     RangeError, UsageError)
from .graph import (MAX_EXACT_COUNT, Graph, adjacency_matvec,
                    apply_transition_transpose, is_connected,
                    is_strongly_connected)

VALID_KINDS = ("degree", "walk_count", "eigenvector", "katz", "pagerank",
               "closeness", "harmonic")

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITERS = 100_000

# Katz decay must keep alpha * lambda1 bounded away from 1.
ALPHA_MARGIN = 1e-9


@dataclass(frozen=True)
class CentralityParams:
    """Which measure to compute and with what knobs.

    ``ell`` applies to walk counts, ``alpha`` to Katz, ``beta`` to PageRank;
    supplying a knob the measure does not use is rejected.
    """

    kind: str
    ell: int | None = None
    alpha: float | None = None
    beta: float | None = None
    tol: float = DEFAULT_TOL
    max_iters: int = DEFAULT_MAX_ITERS

    def __post_init__(self):
        if self.kind not in VALID_KINDS:
            raise ParameterError(
                f"unknown centrality kind {self.kind!r}; "
                f"expected one of {', '.join(VALID_KINDS)}")
        if (self.ell is not None) != (self.kind == "walk_count"):
            raise ParameterError("ell is required for walk_count and "
                                 "invalid for every other kind")
        if self.ell is not None and self.ell < 0:
            raise ParameterError(f"ell must be nonnegative, got {self.ell}")
        if (self.alpha is not None) != (self.kind == "katz"):
            raise ParameterError("alpha is required for katz and invalid "
                                 "for every other kind")
        if self.alpha is not None and self.alpha < 0:
            raise ParameterError(f"alpha must be nonnegative, got {self.alpha}")
        if (self.beta is not None) != (self.kind == "pagerank"):
            raise ParameterError("beta is required for pagerank and invalid "
                                 "for every other kind")
        if self.beta is not None and not 0.0 < self.beta < 1.0:
            raise ParameterError(
                f"beta must lie strictly between 0 and 1, got {self.beta}")
        if not self.tol > 0:
            raise ParameterError(f"tol must be positive, got {self.tol}")
        if self.max_iters < 1:
            raise ParameterError(
                f"max_iters must be at least 1, got {self.max_iters}")


@dataclass(frozen=True)
class CentralityVector:
    """A computed measure: one value per node plus solver diagnostics."""

    values: np.ndarray
    params: CentralityParams
    iterations: int
    residual: float

    def __post_init__(self):
        self.values.setflags(write=False)


@dataclass(frozen=True)
class SpectralResult:
    """Dominant adjacency eigenpair from power iteration."""

    lambda1: float
    vector: np.ndarray
    residual: float
    iterations: int

    def __post_init__(self):
        self.vector.setflags(write=False)


def _require_undirected_connected(graph: Graph, what: str) -> None:
    if graph.directed:
        raise UsageError(f"{what} is defined for undirected graphs")
    if not is_connected(graph):
        raise PreconditionError(f"{what} requires a connected graph")


def degree_centrality(graph: Graph) -> CentralityVector:
    """Degree of every node as float64."""
    _require_undirected_connected(graph, "degree centrality")
    return CentralityVector(values=graph.degree_seq.astype(np.float64),
                            params=CentralityParams(kind="degree"),
                            iterations=0, residual=0.0)


def walk_count(graph: Graph, ell: int) -> CentralityVector:
    """Walks of length ``ell`` from each node: ``A^ell @ 1`` by repeated
    sparse matvec, kept exact in float64 and guarded against overflow."""
    params = CentralityParams(kind="walk_count", ell=ell)
    _require_undirected_connected(graph, "walk-count centrality")
    values = np.ones(graph.node_count)
    for _ in range(ell):
        values = adjacency_matvec(graph, values)
        # Partial sums of nonnegative integers stay exact up to 2**53.
        if values.max() > MAX_EXACT_COUNT:
            raise RangeError(f"walk counts for ell={ell} exceed 2**53 "
                             f"and would lose exactness")
    return CentralityVector(values=values, params=params,
                            iterations=ell, residual=0.0)


def eigenvector_centrality(graph: Graph, tol: float = DEFAULT_TOL,
                           max_iters: int = DEFAULT_MAX_ITERS,
                           ) -> tuple[SpectralResult, CentralityVector]:
    """Dominant eigenpair of the adjacency matrix by power iteration.

    Iterates on ``A + I`` so that bipartite graphs, whose spectrum is
    symmetric, still have a strictly dominant eigenvalue.  Starts from the
    uniform vector and stops when ``max|A r - lambda r| <= tol`` with the
    Rayleigh-quotient eigenvalue estimate.  The vector is positive and
    L1-normalised.
    """
    params = CentralityParams(kind="eigenvector", tol=tol,
                              max_iters=max_iters)
    _require_undirected_connected(graph, "eigenvector centrality")
    vec = np.full(graph.node_count, 1.0 / graph.node_count)
    image = adjacency_matvec(graph, vec)
    residual = np.inf
    for iteration in range(max_iters):
        estimate = (vec @ image) / (vec @ vec)
        residual = np.abs(image - estimate * vec).max()
        if residual <= tol:
            spectral = SpectralResult(lambda1=float(estimate), vector=vec,
                                      residual=float(residual),
                                      iterations=iteration)
            return spectral, CentralityVector(values=vec, params=params,
                                              iterations=iteration,
                                              residual=float(residual))
        shifted = image + vec
        vec = shifted / shifted.sum()
        image = adjacency_matvec(graph, vec)
    raise ConvergenceError(
        f"eigenvector iteration did not reach {tol} in {max_iters} steps",
        residual=float(residual), iterations=max_iters)


def katz_centrality(graph: Graph, alpha: float, tol: float = DEFAULT_TOL,
                    max_iters: int = DEFAULT_MAX_ITERS) -> CentralityVector:
    """Katz vector ``r = 1 + alpha A r`` by Jacobi iteration from the
    all-ones vector; the partial sums of the Neumann series increase
    monotonically toward the solution."""
    params = CentralityParams(kind="katz", alpha=alpha, tol=tol,
                              max_iters=max_iters)
    _require_undirected_connected(graph, "Katz centrality")
    spectral, _ = eigenvector_centrality(graph, tol=tol, max_iters=max_iters)
    limit = (1.0 - ALPHA_MARGIN) / spectral.lambda1
    if alpha > limit:
        raise ParameterError(
            f"alpha={alpha} too large: alpha * lambda1 must stay below 1 "
            f"(lambda1 ~= {spectral.lambda1:.12g}, so alpha <= {limit:.12g})")
    ones = np.ones(graph.node_count)
    vec = ones.copy()
    residual = np.inf
    for iteration in range(max_iters):
        image = ones + alpha * adjacency_matvec(graph, vec)
        # max|image - vec| is the self-consistency defect of vec itself,
        # so return the iterate the certificate was computed for.
        residual = np.abs(image - vec).max()
        if residual <= tol:
            return CentralityVector(values=vec, params=params,
                                    iterations=iteration,
                                    residual=float(residual))
        vec = image
    raise ConvergenceError(
        f"Katz iteration did not reach {tol} in {max_iters} steps",
        residual=float(residual), iterations=max_iters)


def pagerank_centrality(graph: Graph, beta: float, tol: float = DEFAULT_TOL,
                        max_iters: int = DEFAULT_MAX_ITERS) -> CentralityVector:
    """PageRank with teleport weight ``beta``: the fixed point of
    ``r = (1-beta) C^T r + beta/n`` where ``C`` is the out-degree-normalised
    transition matrix.

    Undirected graphs are treated as bidirected.  The graph must be
    (strongly) connected, so every out-degree is positive and no dangling
    correction is needed.  Stops when the L1 fixed-point residual of the
    returned vector is at most ``tol``; the result sums to 1.
    """
    params = CentralityParams(kind="pagerank", beta=beta, tol=tol,
                              max_iters=max_iters)
    if graph.directed:
        if not is_strongly_connected(graph):
            raise PreconditionError(
                "pagerank requires a strongly connected directed graph")
    elif not is_connected(graph):
        raise PreconditionError("pagerank requires a connected graph")
    n = graph.node_count
    teleport = beta / n
    vec = np.full(n, 1.0 / n)
    residual = np.inf
    for iteration in range(max_iters):
        image = ((1.0 - beta) * apply_transition_transpose(graph, vec)
                 + teleport * vec.sum())
        residual = float(np.abs(image - vec).sum())
        if residual <= tol:
            return CentralityVector(values=vec, params=params,
                                    iterations=iteration,
                                    residual=residual)
        vec = image / image.sum()
    raise ConvergenceError(
        f"pagerank iteration did not reach {tol} in {max_iters} steps",
        residual=residual, iterations=max_iters)


def closeness_harmonic(graph: Graph, kind: str) -> CentralityVector:
    """Closeness ``(n-1)/sum_j dist(i,j)`` or harmonic ``sum_j 1/dist(i,j)``
    centrality from per-node breadth-first distances."""
    if kind not in ("closeness", "harmonic"):
        raise ParameterError(
            f"kind must be 'closeness' or 'harmonic', got {kind!r}")
    params = CentralityParams(kind=kind)
    _require_undirected_connected(graph, f"{kind} centrality")
    n = graph.node_count
    offsets, targets = graph.row_offsets, graph.column_targets
    values = np.empty(n)
    for source in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        dist[source] = 0
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                for w in targets[offsets[v]:offsets[v + 1]]:
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        nxt.append(int(w))
            frontier = nxt
        others = np.delete(dist, source).astype(np.float64)
        if n == 1:
            values[source] = 0.0
        elif kind == "closeness":
            values[source] = (n - 1) / others.sum()
        else:
            values[source] = (1.0 / others).sum()
    return CentralityVector(values=values, params=params,
                            iterations=0, residual=0.0)


def solve_lambda1(graph: Graph, tol: float = DEFAULT_TOL,
                  max_iters: int = DEFAULT_MAX_ITERS) -> SpectralResult:
    """Dominant adjacency eigenvalue (convenience wrapper)."""
    spectral, _ = eigenvector_centrality(graph, tol=tol, max_iters=max_iters)
    return spectral


def compute(graph: Graph, params: CentralityParams) -> CentralityVector:
    """Dispatch on ``params.kind``."""
    if params.kind == "degree":
        return degree_centrality(graph)
    if params.kind == "walk_count":
        return walk_count(graph, params.ell)
    if params.kind == "eigenvector":
        return eigenvector_centrality(graph, tol=params.tol,
                                      max_iters=params.max_iters)[1]
    if params.kind == "katz":
        return katz_centrality(graph, params.alpha, tol=params.tol,
                               max_iters=params.max_iters)
    if params.kind == "pagerank":
        return pagerank_centrality(graph, params.beta, tol=params.tol,
                                   max_iters=params.max_iters)
    return closeness_harmonic(graph, params.kind)
