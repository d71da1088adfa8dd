"""Per-node and whole-graph statistics: clustering, eccentricity, degree
distribution, spectral radius, Pearson correlation and assortativity."""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .graph import Graph

EQ2_MODES = ("symmetric", "literal")


class SpectralConvergenceError(RuntimeError):
    def __init__(self, message: str, last_estimate: float):
        super().__init__(message)
        self.last_estimate = last_estimate


class EmptyGraphError(ValueError):
    pass


@dataclass(frozen=True)
class MetricVector:
    name: str
    values: tuple[float, ...]

    def __init__(self, name: str, values: Sequence[float]):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "values", tuple(float(x) for x in values))

    @property
    def mean(self) -> float:
        return math.fsum(self.values) / len(self.values) if self.values else 0.0

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DistributionTable:
    support: list[float]
    pmf: list[float]
    cdf: list[float]

    @classmethod
    def from_values(cls, values: Sequence[float]) -> DistributionTable:
        if not len(values):
            raise EmptyGraphError("empty graph")
        counts = sorted(Counter(values).items())
        total = len(values)
        support = [v for v, _ in counts]
        pmf = [c / total for _, c in counts]
        running, cdf = 0, []
        for _, c in counts:
            running += c
            cdf.append(running / total)
        return cls(support, pmf, cdf)


class Eccentricity(NamedTuple):
    hops: int
    reachable: int  # vertices reached, including the source


@dataclass(frozen=True)
class Assortativity:
    value: float | None  # None when the metric has no variance over edge ends
    mode: str


@dataclass(frozen=True)
class GraphSummary:
    n: int
    m: int
    avg_degree: float
    max_degree: int
    spectral_radius: float
    spectral_ratio: float | None  # None for a graph without edges
    avg_clustering: float
    avg_diameter_per_node: float
    connected: bool
    unreachable_pairs: int  # ordered pairs (u, v) with v not reachable from u


def _as_values(x) -> tuple[float, ...]:
    return x.values if isinstance(x, MetricVector) else tuple(float(v) for v in x)


def edges_among_neighbors(g: Graph, v: int) -> int:
    nbrs = g.neighbors(v)
    masks = g.neighbor_masks()
    nmask = masks[v]
    return sum((masks[w] & nmask).bit_count() for w in nbrs) // 2


def clustering_coefficient(g: Graph, v: int, *, low_degree: float = 0.0) -> float:
    """L / (k(k-1)/2) for a vertex of degree k with L edges among its neighbors.

    Vertices of degree < 2 get ``low_degree``.
    """
    k = g.degree(v)
    if k < 2:
        return low_degree
    return edges_among_neighbors(g, v) / (k * (k - 1) / 2)


def clustering_coefficients(g: Graph, *, low_degree: float = 0.0) -> list[float]:
    return [clustering_coefficient(g, v, low_degree=low_degree) for v in range(g.n)]


def node_diameter(g: Graph, v: int) -> Eccentricity:
    """BFS eccentricity of ``v`` over the vertices it can reach."""
    g._check(v)
    dist = {v: 0}
    queue = deque([v])
    far = 0
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = d
                far = d
                queue.append(y)
    return Eccentricity(far, len(dist))


def eccentricities(g: Graph) -> list[Eccentricity]:
    """``node_diameter`` for every vertex at once, by level-synchronous BFS on a
    dense reachability matrix."""
    n = g.n
    if n == 0:
        return []
    adj = np.zeros((n, n), dtype=np.float32)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1.0
    reached = np.eye(n, dtype=bool)
    frontier = reached.astype(np.float32)
    ecc = np.zeros(n, dtype=np.int64)
    level = 0
    while True:
        new = ((frontier @ adj) > 0) & ~reached
        rows = new.any(axis=1)
        if not rows.any():
            break
        level += 1
        ecc[rows] = level
        reached |= new
        frontier = new.astype(np.float32)
    counts = reached.sum(axis=1)
    return [Eccentricity(int(e), int(c)) for e, c in zip(ecc, counts)]


def degree_distribution(g: Graph) -> DistributionTable:
    if g.n == 0:
        raise EmptyGraphError("empty graph")
    return DistributionTable.from_values(g.degrees())


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def spectral_radius(g: Graph, *, tol: float = 1e-10, max_iter: int = 100_000) -> float:
    """Largest adjacency eigenvalue by power iteration.

    Iterates on A + I so that bipartite components (eigenvalues +/- lambda)
    still converge; the estimate is the Rayleigh quotient of A. Each connected
    component is iterated separately from its all-ones vector and the maximum
    is returned.
    """
    if g.n == 0:
        raise EmptyGraphError("empty graph")
    edges = g.edges()
    if not edges:
        return 0.0
    src = np.array([u for u, v in edges] + [v for u, v in edges], dtype=np.int64)
    dst = np.array([v for u, v in edges] + [u for u, v in edges], dtype=np.int64)
    n = g.n

    def matvec(x):
        return np.bincount(src, weights=x[dst], minlength=n)

    best = 0.0
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        x = np.zeros(n)
        x[comp] = 1.0
        x /= np.linalg.norm(x)
        prev = None
        for _ in range(max_iter):
            ax = matvec(x)
            rq = float(x @ ax)
            if prev is not None and abs(rq - prev) < tol:
                break
            prev = rq
            y = ax + x
            x = y / np.linalg.norm(y)
        else:
            raise SpectralConvergenceError(
                f"power iteration did not converge in {max_iter} iterations", rq
            )
        best = max(best, rq)
    return best


def pearson_correlation(x, y) -> float | None:
    """Sum of centered cross-products over the product of centered norms.

    Returns ``None`` (undefined) when either input has zero variance.
    """
    xs, ys = _as_values(x), _as_values(y)
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise ValueError("need at least two observations")
    xa = np.asarray(xs)
    ya = np.asarray(ys)
    if np.ptp(xa) == 0 or np.ptp(ya) == 0:
        return None
    dx = xa - xa.mean()
    dy = ya - ya.mean()
    # rescale so tiny deviations do not underflow when squared
    dx /= np.abs(dx).max()
    dy /= np.abs(dy).max()
    denom = math.sqrt(float(dx @ dx) * float(dy @ dy))
    if denom == 0.0:
        return None
    r = float(dx @ dy) / denom
    return min(1.0, max(-1.0, r))


def assortativity_index(g: Graph, m, *, mode: str = "symmetric") -> Assortativity:
    """Correlation of a node metric across edge endpoints.

    ``symmetric``: every undirected edge contributes both (i, j) and (j, i), so
    both sides share the edge-end mean. ``literal``: one (i, j) per edge with
    i < j, centered on the node average of the metric.
    """
    if mode not in EQ2_MODES:
        raise ValueError(f"mode must be one of {EQ2_MODES}, got {mode!r}")
    vals = np.asarray(_as_values(m))
    if len(vals) != g.n:
        raise ValueError(f"metric has {len(vals)} values for {g.n} vertices")
    edges = g.edges()
    if not edges:
        raise ValueError("assortativity needs at least one edge")
    e = np.array(edges)
    a, b = vals[e[:, 0]], vals[e[:, 1]]
    if mode == "symmetric":
        r = pearson_correlation(np.concatenate([a, b]), np.concatenate([b, a]))
        return Assortativity(r, mode)
    if np.ptp(vals) == 0:
        return Assortativity(None, mode)
    mbar = vals.mean()
    da, db = a - mbar, b - mbar
    denom = math.sqrt(float(da @ da) * float(db @ db))
    if denom == 0.0:
        return Assortativity(None, mode)
    r = float(da @ db) / denom
    return Assortativity(min(1.0, max(-1.0, r)), mode)


def graph_summary(g: Graph, *, low_degree: float = 0.0) -> GraphSummary:
    if g.n == 0:
        raise EmptyGraphError("empty graph")
    degs = g.degrees()
    avg_degree = sum(degs) / g.n
    rho = spectral_radius(g)
    eccs = eccentricities(g)
    unreachable = sum(g.n - e.reachable for e in eccs)
    cc = clustering_coefficients(g, low_degree=low_degree)
    return GraphSummary(
        n=g.n,
        m=g.m,
        avg_degree=avg_degree,
        max_degree=max(degs),
        spectral_radius=rho,
        spectral_ratio=rho / avg_degree if avg_degree else None,
        avg_clustering=math.fsum(cc) / g.n,
        avg_diameter_per_node=sum(e.hops for e in eccs) / g.n,
        connected=unreachable == 0,
        unreachable_pairs=unreachable,
    )
