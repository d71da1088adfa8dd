"""One-dimensional ring lattices and Watts-Strogatz rewiring."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .graph import Graph

RNG_NAME = "numpy.random.Generator(PCG64)"


@dataclass(frozen=True)
class WSParams:
    n: int
    k_regular: int
    p_rewire: float
    seed: int = 0

    def __post_init__(self):
        check_lattice(self.n, self.k_regular)
        if not 0.0 <= self.p_rewire <= 1.0:
            raise ValueError(f"p_rewire must lie in [0, 1], got {self.p_rewire}")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class RewireStats:
    attempted: int  # edges selected for rewiring
    rewired: int
    capped: int  # selected but left in place after exhausting resamples


def check_lattice(n: int, k: int) -> None:
    if k % 2:
        raise ValueError(f"k_regular must be even, got {k}")
    if k < 2:
        raise ValueError(f"k_regular must be at least 2, got {k}")
    if k >= n:
        raise ValueError(f"k_regular must be below n (k={k}, n={n})")


def ring_lattice(n: int, k_regular: int) -> Graph:
    """Vertex i joined to (i +/- d) mod n for d = 1..k_regular/2."""
    check_lattice(n, k_regular)
    half = k_regular // 2
    return Graph.build(n, ((i, (i + d) % n) for i in range(n) for d in range(1, half + 1)))


def rewire_with_stats(g: Graph, params: WSParams) -> tuple[Graph, RewireStats]:
    """Rewire each original edge (u, v), u < v, in canonical order.

    With probability ``p_rewire`` the edge becomes (u, w) for a uniform w not in
    {u, v} and not already adjacent to u. Targets are resampled up to 100*n
    times; if none is found the edge stays. Edges created here are never
    revisited.
    """
    n = g.n
    rng = np.random.default_rng(params.seed)
    adj = [set(g.neighbors(v)) for v in range(n)]
    cap = 100 * n
    attempted = rewired = capped = 0
    for u, v in g.edges():
        if not rng.random() < params.p_rewire:
            continue
        attempted += 1
        for _ in range(cap):
            w = int(rng.integers(n))
            if w != u and w != v and w not in adj[u]:
                break
        else:
            capped += 1
            continue
        adj[u].discard(v)
        adj[v].discard(u)
        adj[u].add(w)
        adj[w].add(u)
        rewired += 1
    out = Graph(n, [tuple(sorted(a)) for a in adj])
    return out, RewireStats(attempted, rewired, capped)


def rewire(g: Graph, params: WSParams) -> Graph:
    return rewire_with_stats(g, params)[0]


def watts_strogatz(params: WSParams) -> Graph:
    return rewire(ring_lattice(params.n, params.k_regular), params)
