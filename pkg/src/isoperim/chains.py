"""Finite Markov chains built from weighted graphs or raw transition matrices.

A chain bundles the row-stochastic transition matrix P, the stationary
distribution pi (strictly positive, sums to 1), and an origin tag recording
how it was constructed. States are 0-based everywhere in the library; file
formats use 1-based ids and convert at the I/O boundary.

All values are immutable after construction (arrays are frozen), so chains
can be shared freely across threads.
"""

from __future__ import annotations

import dataclasses
import os
import numpy as np

from .errors import (
    DeltaOutOfRange,
    DisconnectedGraph,
    IsolatedVertex,
    NegativeWeight,
    NotIrreducible,
    NotStronglyConnected,
    NumericalFailure,
    SinkVertex,
)

# Weights below this are structural zeros when building support digraphs.
STRUCTURAL_ZERO = 1e-15
ROW_SUM_TOL = 1e-12
STATIONARY_TOL = 1e-10
REVERSIBILITY_TOL = 1e-10

_POWER_ITER_TOL = 1e-13
_POWER_ITER_CAP = 10**6


@dataclasses.dataclass(frozen=True)
class WeightedGraph:
    """Edge-list graph with nonnegative weights.

    Undirected graphs store each edge once with u < v. Self-loops are rejected
    unless ``allow_self_loops`` is set; when present they contribute their
    weight once to the degree.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]
    directed: bool = False
    allow_self_loops: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        object.__setattr__(self, "edges", tuple((int(u), int(v), float(w)) for u, v, w in self.edges))
        seen: set[tuple[int, int]] = set()
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if not np.isfinite(w):
                raise ValueError(f"edge ({u}, {v}) has non-finite weight {w}")
            if w < 0:
                raise NegativeWeight(f"edge ({u}, {v}) has negative weight {w}")
            if u == v and w > 0 and not self.allow_self_loops:
                raise ValueError(f"self-loop at vertex {u} without allow_self_loops")
            if not self.directed and u > v:
                raise ValueError(f"undirected edge ({u}, {v}) must be stored with u < v")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    def weight_matrix(self) -> np.ndarray:
        """Dense weight matrix; symmetric for undirected graphs."""
        W = np.zeros((self.n, self.n))
        for u, v, w in self.edges:
            W[u, v] += w
            if not self.directed and u != v:
                W[v, u] += w
        return W


@dataclasses.dataclass(frozen=True, eq=False)
class MarkovChain:
    """Irreducible finite Markov chain (V, P, pi).

    Invariants enforced at construction: rows of P sum to 1 within 1e-12,
    entries lie in [0, 1], pi is strictly positive with unit sum and satisfies
    ||pi^T P - pi^T||_inf <= 1e-10, and the support digraph of P is strongly
    connected.
    """

    n: int
    P: np.ndarray
    pi: np.ndarray
    origin: str = "raw-matrix"

    def __post_init__(self) -> None:
        P = np.array(self.P, dtype=float)
        if P.ndim != 2 or P.shape[0] != P.shape[1]:
            raise ValueError("P must be a square matrix")
        if P.shape[0] != self.n:
            raise ValueError("n does not match P")
        if not np.all(np.isfinite(P)):
            raise ValueError("P has non-finite entries")
        if P.min() < -1e-14 or P.max() > 1 + 1e-12:
            raise ValueError("P entries must lie in [0, 1]")
        rows = P.sum(axis=1)
        if np.max(np.abs(rows - 1.0)) > ROW_SUM_TOL:
            raise ValueError("rows of P must sum to 1 within 1e-12")
        if not is_irreducible(P):
            raise NotIrreducible("support digraph of P is not strongly connected")

        # Reuse an already-frozen pi so derived chains (e.g. the lazy transform)
        # share the exact same stationary vector object.
        if isinstance(self.pi, np.ndarray) and self.pi.dtype == np.float64 and not self.pi.flags.writeable:
            pi = self.pi
        else:
            pi = np.array(self.pi, dtype=float)
        if pi.shape != (self.n,):
            raise ValueError("pi has wrong shape")
        if pi.min() <= 0:
            raise ValueError("pi must be strictly positive")
        if abs(pi.sum() - 1.0) > 1e-12:
            raise ValueError("pi must sum to 1")
        if np.max(np.abs(pi @ P - pi)) > STATIONARY_TOL:
            raise NumericalFailure("pi is not stationary for P within 1e-10")

        P.setflags(write=False)
        pi.setflags(write=False)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "pi", pi)


def _reaches_all(adj: np.ndarray) -> bool:
    """True iff every vertex is reachable from vertex 0 in the boolean digraph."""
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = adj[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def is_irreducible(P: np.ndarray) -> bool:
    """Strong connectivity of {(i, j) : P(i, j) > 0}, by forward and reverse traversal."""
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ValueError("P must be a square matrix")
    support = P > STRUCTURAL_ZERO
    return _reaches_all(support) and _reaches_all(support.T)


def _power_iteration(P: np.ndarray) -> np.ndarray | None:
    """Stationary vector via power iteration on the half-lazy chain, or None."""
    n = P.shape[0]
    Q = 0.5 * (np.eye(n) + P)
    x = np.full(n, 1.0 / n)
    for _ in range(_POWER_ITER_CAP):
        x_new = x @ Q
        x_new /= x_new.sum()
        if np.abs(x_new - x).sum() < _POWER_ITER_TOL:
            return x_new
        x = x_new
    return None


def stationary_distribution(P: np.ndarray) -> np.ndarray:
    """Unique stationary distribution of an irreducible row-stochastic matrix.

    Solves (P^T - I) x = 0 with the last row replaced by the normalization
    sum(x) = 1 (partial-pivoting dense solve); falls back to power iteration
    on the half-lazy chain when the direct solve is singular or inaccurate.
    """
    P = np.asarray(P, dtype=float)
    if not is_irreducible(P):
        raise NotIrreducible("stationary distribution requires an irreducible matrix")
    n = P.shape[0]

    A = P.T - np.eye(n)
    A[-1, :] = 1.0
    b = np.zeros(n)
    b[-1] = 1.0
    pi: np.ndarray | None = None
    try:
        x = np.linalg.solve(A, b)
        if np.all(np.isfinite(x)) and x.min() > 0:
            pi = x / x.sum()
    except np.linalg.LinAlgError:
        pi = None
    if pi is None or np.max(np.abs(pi @ P - pi)) > STATIONARY_TOL:
        pi = _power_iteration(P)
    if pi is None or np.max(np.abs(pi @ P - pi)) > STATIONARY_TOL:
        raise NumericalFailure("stationary residual above 1e-10 after both solver paths")
    return pi


def chain_from_matrix(P: np.ndarray, origin: str = "raw-matrix", pi: np.ndarray | None = None) -> MarkovChain:
    """Wrap a row-stochastic matrix as a validated chain, computing pi if needed."""
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ValueError("P must be a square matrix")
    rows = P.sum(axis=1)
    if np.max(np.abs(rows - 1.0)) > ROW_SUM_TOL:
        raise ValueError("rows of P must sum to 1 within 1e-12")
    if pi is None:
        pi = stationary_distribution(P)
    return MarkovChain(n=P.shape[0], P=P, pi=np.asarray(pi, dtype=float), origin=origin)


def chain_from_undirected(g: WeightedGraph) -> MarkovChain:
    """Natural random walk on a connected weighted undirected graph.

    P(u, v) = w(uv) / deg_w(u) and pi(u) = deg_w(u) / sum_v deg_w(v); the
    result satisfies detailed balance by construction.
    """
    if g.directed:
        raise ValueError("graph must be undirected")
    W = g.weight_matrix()
    deg = W.sum(axis=1)
    if deg.min() <= STRUCTURAL_ZERO:
        raise IsolatedVertex(f"vertex {int(deg.argmin())} has zero weighted degree")
    support = W > STRUCTURAL_ZERO
    if not _reaches_all(support):
        raise DisconnectedGraph("support graph is not connected")
    P = W / deg[:, None]
    pi = deg / deg.sum()
    return MarkovChain(n=g.n, P=P, pi=pi, origin="undirected-graph")


def chain_from_directed(g: WeightedGraph) -> MarkovChain:
    """Natural random walk on a strongly connected weighted directed graph."""
    if not g.directed:
        raise ValueError("graph must be directed")
    W = g.weight_matrix()
    out = W.sum(axis=1)
    if out.min() <= STRUCTURAL_ZERO:
        raise SinkVertex(f"vertex {int(out.argmin())} has zero out-weight")
    P = W / out[:, None]
    if not is_irreducible(P):
        raise NotStronglyConnected("support digraph is not strongly connected")
    pi = stationary_distribution(P)
    return MarkovChain(n=g.n, P=P, pi=pi, origin="directed-graph")


def is_reversible(c: MarkovChain, tol: float = REVERSIBILITY_TOL) -> bool:
    """Detailed balance check: max |pi(i)P(i,j) - pi(j)P(j,i)| <= tol * max flow.

    The tolerance is relative to the largest entry of the flow matrix
    pi(i)P(i,j), making the test scale-free.
    """
    F = c.pi[:, None] * c.P
    scale = F.max()
    if scale == 0.0:
        return True
    return bool(np.max(np.abs(F - F.T)) <= tol * scale)


def lazy_transform(c: MarkovChain, delta: float) -> MarkovChain:
    """Interpolate toward the identity: P -> (1 - delta) I + delta P.

    The stationary vector is unchanged (the returned chain shares pi with the
    input); the spectrum of I - P and every phi_p scale by delta and delta^p
    respectively.
    """
    if not (0 < delta <= 1):
        raise DeltaOutOfRange(f"delta must lie in (0, 1], got {delta}")
    P2 = (1.0 - delta) * np.eye(c.n) + delta * c.P
    return MarkovChain(n=c.n, P=P2, pi=c.pi, origin=c.origin)


def exact_enumeration_cap() -> int:
    """Current cap on exact subset enumeration (ISO_MAX_EXACT_N overrides)."""
    return int(os.environ.get("ISO_MAX_EXACT_N", "24"))
