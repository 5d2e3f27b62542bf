"""Benchmark chain families and the inverse-cube circulant counterexample.

The star of the module is the cyclic chain on [n] with transition weights

    P(i, j) = 1 / ( C * min{|i-j|, n-|i-j|}^3 ),   C = sum_d 1/min(d, n-d)^3,

a 1-regular weighted graph (uniform stationary distribution, reversible).
Along this family lambda_2(I - P) shrinks like log(n)/n^2 while phi_{1/2}
stays of order log(n)/n, so the ratio phi_{1/2}/sqrt(lambda_2) grows without
bound: no universal inequality phi_{1/2} <= O(sqrt(lambda_2)) can hold.

Everything needed to certify that at scale is here: analytic circulant
eigenvalues (DFT of the first row), exact arc values of phi_{1/2} from kernel
prefix sums without materializing the matrix, the block lower-bound function
h for cyclic 2-colorings with its merge identity, and a scan emitting the
scaled table rows.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .bounds import BoundReport, make_report
from .chains import MarkovChain, WeightedGraph, chain_from_directed, chain_from_undirected
from .errors import (
    DimensionTooLarge,
    EmptySet,
    InvalidBlocks,
    MassTooLarge,
    NonSymmetricCirculant,
    NoZeroBlock,
    OverlappingSets,
    TooSmall,
)

_MASS_SLACK = 1e-12


# --------------------------------------------------------------------------
# inverse-cube circulant family
# --------------------------------------------------------------------------

def kernel_weights(n: int) -> np.ndarray:
    """Cyclic kernel w[d] = 1/min(d, n-d)^3 for d = 1..n-1 (w[0] = 0)."""
    d = np.arange(n)
    m = np.minimum(d, n - d).astype(float)
    w = np.zeros(n)
    w[1:] = 1.0 / m[1:] ** 3
    return w


def normalizer(n: int) -> float:
    """C = sum_{d=1}^{n-1} 1/min(d, n-d)^3, the row weight making P stochastic."""
    return math.fsum(kernel_weights(n)[1:].tolist())


@dataclasses.dataclass(frozen=True, eq=False)
class CounterexampleMeta:
    """Size, normalizing constant, and the generated chain itself."""

    n: int
    C: float
    chain: MarkovChain


def gen_ht_counterexample(n: int) -> tuple[MarkovChain, CounterexampleMeta]:
    """The inverse-cube circulant chain on n >= 3 vertices.

    Rows are cyclic shifts of the kernel divided by C, so the chain is
    symmetric, doubly stochastic, reversible, and has uniform pi.
    """
    if n < 3:
        raise TooSmall(f"family needs n >= 3, got {n}")
    w = kernel_weights(n)
    C = normalizer(n)
    P = np.empty((n, n))
    for i in range(n):
        P[i] = np.roll(w, i)
    P /= C
    pi = np.full(n, 1.0 / n)
    chain = MarkovChain(n=n, P=P, pi=pi, origin="undirected-graph")
    return chain, CounterexampleMeta(n=n, C=C, chain=chain)


def circulant_lambda2(first_row: Sequence[float]) -> float:
    """Smallest nonzero-frequency eigenvalue of a symmetric circulant.

    The rows a must satisfy a[d] == a[n-d] so the spectrum is real; the
    eigenvalues are the DFT of the first row and the value returned is
    min over k != 0 of sum_d a[d] cos(2 pi k d / n). Feed the first row of
    I - P to get lambda_2 of the chain.
    """
    a = np.asarray(first_row, dtype=float)
    if a.ndim != 1 or a.size < 2:
        raise ValueError("first row must be a vector of length >= 2")
    scale = max(float(np.abs(a).max()), 1e-300)
    if np.max(np.abs(a[1:] - a[1:][::-1])) > 1e-12 * scale:
        raise NonSymmetricCirculant("first row must satisfy a[d] == a[n-d]")
    eigs = np.fft.fft(a).real
    return float(eigs[1:].min())


def _kahan_cumsum(x: np.ndarray) -> np.ndarray:
    """Compensated running sum; keeps kernel prefix tails accurate."""
    out = np.empty(x.size)
    total = 0.0
    comp = 0.0
    for i, xi in enumerate(x):
        y = float(xi) - comp
        t = total + y
        comp = (t - total) - y
        total = t
        out[i] = total
    return out


def _kernel_prefix(n: int) -> tuple[np.ndarray, float]:
    """Prefix sums W[m] = sum_{j<=m} w[j] (W[0] = 0) and the normalizer C."""
    w = kernel_weights(n)
    prefix = np.concatenate([[0.0], _kahan_cumsum(w[1:])])
    return prefix, math.fsum(w[1:].tolist())


def arc_phi_half(n: int, l: int) -> float:
    """phi_{1/2} of the contiguous arc {1..l} in the inverse-cube chain.

    Uses kernel prefix sums, never materializing P: for arc vertex v the
    crossing mass is (W[n-v] - W[l-v]) / C, and with uniform pi

        phi_{1/2} = (1/l) * sum_{v=1}^{l} sqrt(P(v, complement)).
    """
    if n < 3:
        raise TooSmall(f"family needs n >= 3, got {n}")
    if not (1 <= l <= n // 2):
        raise ValueError(f"arc length must satisfy 1 <= l <= n/2, got l={l}, n={n}")
    prefix, C = _kernel_prefix(n)
    v = np.arange(1, l + 1)
    cross = (prefix[n - v] - prefix[l - v]) / C
    return math.fsum(np.sqrt(np.maximum(cross, 0.0)).tolist()) / l


def _arc_min_phi_half(n: int, prefix: np.ndarray, C: float) -> float:
    best = math.inf
    for l in range(1, n // 2 + 1):
        v = np.arange(1, l + 1)
        cross = (prefix[n - v] - prefix[l - v]) / C
        best = min(best, float(np.sqrt(np.maximum(cross, 0.0)).sum()) / l)
    return best


class ScanRow(NamedTuple):
    n: int
    lambda2: float
    phi_half_arc: float
    rho: float
    lambda2_scaled: float
    phi_scaled: float


def scaling_scan(n_list: Iterable[int], output: str | None = None) -> list[ScanRow]:
    """Growth table of the counterexample family, in ascending n.

    Columns: analytic lambda_2 of I - P, the arc-restricted minimum of
    phi_{1/2} (an upper bound on the true value; arcs are conjectured but not
    proven optimal), rho = phi_half_arc / sqrt(lambda2), and the scaled
    quantities lambda2 * n^2 / log n and phi_half_arc * n / log n. Writes CSV
    with full-precision scientific notation when ``output`` is given.
    """
    ns = sorted({int(n) for n in n_list})
    if not ns:
        raise ValueError("n_list must be nonempty")
    if ns[0] < 8:
        raise TooSmall(f"scan needs every n >= 8, got {ns[0]}")
    rows: list[ScanRow] = []
    for n in ns:
        prefix, C = _kernel_prefix(n)
        first_row = -kernel_weights(n) / C
        first_row[0] = 1.0
        lam = circulant_lambda2(first_row)
        phi = _arc_min_phi_half(n, prefix, C)
        rows.append(
            ScanRow(
                n=n,
                lambda2=lam,
                phi_half_arc=phi,
                rho=phi / math.sqrt(lam),
                lambda2_scaled=lam * n * n / math.log(n),
                phi_scaled=phi * n / math.log(n),
            )
        )
    if output is not None:
        lines = ["n,lambda2,phi_half_arc,rho,lambda2_scaled,phi_scaled"]
        for r in rows:
            lines.append(
                f"{r.n},{r.lambda2:.16e},{r.phi_half_arc:.16e},{r.rho:.16e},"
                f"{r.lambda2_scaled:.16e},{r.phi_scaled:.16e}"
            )
        with open(output, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return rows


# --------------------------------------------------------------------------
# standard families
# --------------------------------------------------------------------------

def cycle_graph(n: int) -> WeightedGraph:
    """Unit-weight ring on n >= 3 vertices."""
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1, 1.0) for i in range(n - 1)] + [(0, n - 1, 1.0)]
    return WeightedGraph(n=n, edges=tuple(edges))


def hypercube_graph(d: int) -> WeightedGraph:
    """Unit-weight boolean hypercube Q_d; 2^d vertices, d-regular."""
    if d < 1:
        raise TooSmall(f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    edges = [(x, x ^ (1 << i), 1.0) for x in range(n) for i in range(d) if not (x >> i) & 1]
    return WeightedGraph(n=n, edges=tuple(edges))


def dumbbell_graph(m: int) -> WeightedGraph:
    """Two complete graphs K_m joined by a single unit edge (vertices m-1, m)."""
    if m < 3:
        raise TooSmall(f"dumbbell needs m >= 3, got {m}")
    edges = []
    for base in (0, m):
        edges += [(base + u, base + v, 1.0) for u in range(m) for v in range(u + 1, m)]
    edges.append((m - 1, m, 1.0))
    return WeightedGraph(n=2 * m, edges=tuple(edges))


def ht_counterexample_graph(n: int) -> WeightedGraph:
    """The inverse-cube kernel as an explicit weighted edge list."""
    if n < 3:
        raise TooSmall(f"family needs n >= 3, got {n}")
    w = kernel_weights(n)
    edges = tuple((u, v, float(w[v - u])) for u in range(n) for v in range(u + 1, n))
    return WeightedGraph(n=n, edges=edges)


def random_reversible_graph(n: int, density: float = 0.5, seed: int = 0) -> WeightedGraph:
    """Seeded random connected weighted graph.

    Symmetric uniform(0,1) weights kept independently with probability
    ``density``, plus a Hamiltonian cycle that is always kept, so the walk is
    irreducible for every draw.
    """
    if n < 3:
        raise TooSmall(f"random family needs n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    weights = rng.random((n, n))
    keep = rng.random((n, n)) < density
    ring = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in ring or keep[u, v]:
                edges.append((u, v, float(weights[u, v])))
    return WeightedGraph(n=n, edges=tuple(edges))


def random_directed_graph(n: int, density: float = 0.5, seed: int = 0) -> WeightedGraph:
    """Seeded random strongly connected directed graph (directed uniform
    weights kept with probability ``density`` plus the directed ring)."""
    if n < 2:
        raise TooSmall(f"random directed family needs n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    weights = rng.random((n, n))
    keep = rng.random((n, n)) < density
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if v == (u + 1) % n or keep[u, v]:
                edges.append((u, v, float(weights[u, v])))
    return WeightedGraph(n=n, edges=tuple(edges), directed=True)


def gen_cycle(n: int) -> MarkovChain:
    return chain_from_undirected(cycle_graph(n))


def gen_hypercube(d: int) -> MarkovChain:
    return chain_from_undirected(hypercube_graph(d))


def gen_dumbbell(m: int) -> MarkovChain:
    return chain_from_undirected(dumbbell_graph(m))


def gen_random_reversible(n: int, density: float = 0.5, seed: int = 0) -> MarkovChain:
    return chain_from_undirected(random_reversible_graph(n, density, seed))


def gen_random_directed(n: int, density: float = 0.5, seed: int = 0) -> MarkovChain:
    return chain_from_directed(random_directed_graph(n, density, seed))


# --------------------------------------------------------------------------
# hypercube boundary functionals
# --------------------------------------------------------------------------

class HypercubeQuantities(NamedTuple):
    poincare_num: float  # E_mu[h_S]
    talagrand_num: float  # E_mu[sqrt(h_S)]
    vertex_boundary: float  # mu(dS)


def hypercube_quantities(d: int, subset: Iterable[int]) -> HypercubeQuantities:
    """Exact boundary functionals of a subset of {0,1}^d under uniform mu.

    h_S(x) counts the coordinates whose flip leaves S (0 off S). Then
    phi_1(S) = E[h_S] / (d mu(S)), phi_{1/2}(S) = E[sqrt h_S] / (sqrt(d) mu(S))
    and phi_0(S) = mu(dS) / mu(S) on the hypercube walk, matching
    phi_p_of_set on gen_hypercube(d).
    """
    if d > 14:
        raise DimensionTooLarge(f"hypercube quantities support d <= 14, got {d}")
    if d < 1:
        raise TooSmall(f"dimension must be >= 1, got {d}")
    n = 1 << d
    members = np.zeros(n, dtype=bool)
    idx = np.fromiter((int(x) for x in subset), dtype=np.int64)
    if idx.size == 0:
        raise EmptySet("subset must be nonempty")
    if idx.min() < 0 or idx.max() >= n:
        raise ValueError("subset contains points outside {0,1}^d")
    members[idx] = True
    mu_s = members.sum() / n
    if mu_s > 0.5 + _MASS_SLACK:
        raise MassTooLarge(f"mu(S) = {mu_s} exceeds 1/2")
    points = np.arange(n)
    h = np.zeros(n, dtype=np.int64)
    for i in range(d):
        h += members & ~members[points ^ (1 << i)]
    return HypercubeQuantities(
        poincare_num=float(h.sum()) / n,
        talagrand_num=float(np.sqrt(h).sum()) / n,
        vertex_boundary=float((h > 0).sum()) / n,
    )


def sqrt_crossweight(c: MarkovChain, A: Iterable[int], B: Iterable[int]) -> float:
    """f(A, B) = sum_{u in A} sqrt(P(u, B)) for disjoint vertex sets.

    On the inverse-cube chain with B the complement of A this equals
    |A| * phi_{1/2}(A) because pi is uniform.
    """
    a = np.unique(np.fromiter((int(v) for v in A), dtype=np.int64))
    b = np.unique(np.fromiter((int(v) for v in B), dtype=np.int64))
    if a.size == 0 or b.size == 0:
        raise EmptySet("both sets must be nonempty")
    if np.intersect1d(a, b).size:
        raise OverlappingSets("sets must be disjoint")
    if a.min() < 0 or a.max() >= c.n or b.min() < 0 or b.max() >= c.n:
        raise ValueError("vertex out of range")
    cross = c.P[np.ix_(a, b)].sum(axis=1)
    return math.fsum(np.sqrt(np.maximum(cross, 0.0)).tolist())


# --------------------------------------------------------------------------
# block partitions of the cycle and the log lower bound
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class PartitionBlocks:
    """Alternating contiguous block sizes (a1, b1, ..., ak, bk) on the cycle.

    Walking clockwise from vertex 0: the first a1 vertices belong to side A,
    the next b1 to side B, and so on. Zero sizes are legal only transiently
    (they appear mid merge); a canonical partition has all sizes positive.
    """

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) < 2 or len(sizes) % 2 != 0:
            raise InvalidBlocks("sizes must alternate (a1, b1, ..., ak, bk) with k >= 1")
        if any(s < 0 for s in sizes):
            raise InvalidBlocks("block sizes must be nonnegative")
        if sum(sizes) <= 0:
            raise InvalidBlocks("total size must be positive")
        object.__setattr__(self, "sizes", sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def k(self) -> int:
        return len(self.sizes) // 2

    @property
    def is_canonical(self) -> bool:
        return all(s > 0 for s in self.sizes)

    def vertex_sets(self) -> tuple[list[int], list[int]]:
        """(A, B) as 0-based vertex lists, walking the cycle from vertex 0."""
        a: list[int] = []
        b: list[int] = []
        pos = 0
        for j, size in enumerate(self.sizes):
            target = a if j % 2 == 0 else b
            target.extend(range(pos, pos + size))
            pos += size
        return a, b

    @classmethod
    def from_membership(cls, in_a: Sequence[bool]) -> "PartitionBlocks":
        """Build from a cyclic 2-coloring; vertex 0 must be in A and the last
        vertex in B so the block list starts with an A run."""
        flags = [bool(x) for x in in_a]
        if not flags or not flags[0] or flags[-1]:
            raise InvalidBlocks("coloring must start in A and end in B")
        sizes = []
        current, count = True, 0
        for f in flags:
            if f == current:
                count += 1
            else:
                sizes.append(count)
                current, count = f, 1
        sizes.append(count)
        return cls(sizes=tuple(sizes))


def block_log_sum(pb: PartitionBlocks) -> float:
    """The cyclic-block function h lower-bounding sqrt(2C) f(A, B).

    Sums +/- log(|[S, T]| + 1) over every ordered contiguous block [S, T]
    spanning 1..2k-1 consecutive sets (single sets included, the full wrap
    excluded), positive when the block has an odd number of sets and negative
    otherwise, minus k log(n + 1). For k = 1 this is
    log(a1 + 1) + log(b1 + 1) - log(n + 1); merging across a zero-size block
    leaves the value unchanged and the split x -> (x, b1, s - x, ...) is
    concave, so minima sit at contiguous configurations.
    """
    sizes = pb.sizes
    m = len(sizes)
    k = pb.k
    n = pb.n
    ext = np.concatenate([sizes, sizes]).astype(float)
    cum = np.concatenate([[0.0], np.cumsum(ext)])
    terms = []
    for s in range(m):
        for cnt in range(1, m):
            size = cum[s + cnt] - cum[s]
            term = math.log(size + 1.0)
            terms.append(term if cnt % 2 == 1 else -term)
    terms.append(-k * math.log(n + 1.0))
    return math.fsum(terms)


def block_merge_residual(pb: PartitionBlocks) -> float:
    """|h(original) - h(merged)| for a partition with exactly one zero block.

    Removing the zero block merges its two same-side neighbours; the value of
    block_log_sum is invariant under this merge (the residual is fp noise,
    <= 1e-12).
    """
    sizes = list(pb.sizes)
    zeros = [i for i, s in enumerate(sizes) if s == 0]
    if len(zeros) != 1:
        raise NoZeroBlock(f"expected exactly one zero block, found {len(zeros)}")
    if pb.k == 1:
        raise InvalidBlocks("k = 1 leaves no valid merge target")
    z = zeros[0]
    rot = sizes[z:] + sizes[:z]  # zero block first; h is rotation-invariant
    rest = rot[1:]
    merged = PartitionBlocks(sizes=tuple([rest[0] + rest[-1]] + rest[1:-1]))
    return abs(block_log_sum(pb) - block_log_sum(merged))


def check_block_lower_bound(c: MarkovChain, pb: PartitionBlocks, C: float | None = None) -> BoundReport:
    """h(blocks) <= sqrt(2C) f(A, B) on the inverse-cube chain.

    The blocks must describe an actual 2-coloring of the chain's cycle (all
    sizes positive, total n); the chain is checked to be the inverse-cube
    circulant before evaluating both sides.
    """
    if pb.n != c.n:
        raise InvalidBlocks(f"blocks cover {pb.n} vertices but the chain has {c.n}")
    if not pb.is_canonical:
        raise InvalidBlocks("blocks must all be nonempty to describe a coloring")
    if C is None:
        C = normalizer(c.n)
    expected_row = kernel_weights(c.n) / C
    if not np.allclose(c.P[0], expected_row, rtol=0.0, atol=1e-12):
        raise ValueError("chain is not the inverse-cube circulant family")
    A, B = pb.vertex_sets()
    lhs = block_log_sum(pb)
    rhs = math.sqrt(2.0 * C) * sqrt_crossweight(c, A, B)
    return make_report(
        "block_log_lower_bound",
        lhs,
        rhs,
        witnesses={"sizes": pb.sizes, "C": C},
    )
