"""Exact maximum clique and per-vertex maximal clique sizes by branch and bound.

Candidate sets are int bitsets over vertex ids. "Select any vertex from U"
always takes the lowest id, so every search is reproducible.

``nprime_filter`` controls how the neighbors of the chosen vertex ``u`` are
restricted before recursing:

* ``"w"`` (default): keep neighbors ``w`` of ``u`` with ``degree(w) >= bound``.
* ``"u"``: keep all neighbors of ``u`` if ``degree(u) >= bound``, else none.

Both are admissible prunings (a clique larger than ``bound`` needs every member
to have degree at least ``bound``), so results agree; only the work differs.
"""

from __future__ import annotations

import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .graph import Graph

NPRIME_FILTERS = ("w", "u")
ORACLE_MAX_N = 25

# depth never exceeds the clique size, but leave headroom for large cliques
sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


class CliqueBudgetExceeded(RuntimeError):
    """Wall-clock budget ran out; ``partial`` holds per-vertex sizes found so far
    (``None`` for vertices whose search did not complete)."""

    def __init__(self, message: str, partial: list[int | None] | None = None):
        super().__init__(message)
        self.partial = partial


@dataclass
class CliqueReport:
    per_vertex: list[int]
    max_size: int
    average: float
    histogram: dict[int, int] = field(default_factory=dict)

    @classmethod
    def from_sizes(cls, sizes: list[int]) -> CliqueReport:
        sizes = list(sizes)
        hist = dict(sorted(Counter(sizes).items()))
        return cls(
            per_vertex=sizes,
            max_size=max(sizes, default=0),
            average=sum(sizes) / len(sizes) if sizes else 0.0,
            histogram=hist,
        )


class _Search:
    """Shared state for one graph: neighbor bitsets and degree-threshold masks."""

    def __init__(self, g: Graph, nprime_filter: str = "w", deadline: float | None = None):
        if nprime_filter not in NPRIME_FILTERS:
            raise ValueError(f"nprime_filter must be one of {NPRIME_FILTERS}, got {nprime_filter!r}")
        self.masks = g.neighbor_masks()
        self.deg = g.degrees()
        top = max(self.deg, default=0) + 2
        # atleast[b] = bitset of vertices with degree >= b
        self.atleast = [0] * (top + 1)
        for v, d in enumerate(self.deg):
            for b in range(min(d, top) + 1):
                self.atleast[b] |= 1 << v
        self.filter_w = nprime_filter == "w"
        self.deadline = deadline
        self.calls = 0

    def _tick(self):
        self.calls += 1
        if self.deadline is not None and not self.calls & 0x3FF and time.monotonic() > self.deadline:
            raise CliqueBudgetExceeded("clique search exceeded its time budget")

    def _nprime(self, u: int, bound: int) -> int:
        if self.filter_w:
            return self.masks[u] & self.atleast[bound] if bound < len(self.atleast) else 0
        return self.masks[u] if self.deg[u] >= bound else 0

    def max_clique(self) -> int:
        best = 0

        def clique(cand: int, size: int) -> None:
            nonlocal best
            self._tick()
            if not cand:
                if size > best:
                    best = size
                return
            while cand:
                if size + cand.bit_count() <= best:
                    return
                low = cand & -cand
                cand ^= low
                u = low.bit_length() - 1
                clique(cand & self._nprime(u, best), size + 1)

        for v in range(len(self.masks)):
            if self.deg[v] >= best:
                cand = self.masks[v] & self.atleast[best] if best < len(self.atleast) else 0
                clique(cand, 1)
        return best

    def vertex_clique(self, v: int, start: int = 0, lower: list[int] | None = None) -> int:
        """Largest clique containing ``v``. ``start`` is a bound already known to be
        attainable; when ``lower`` is given, every clique recorded raises the
        bounds of its members there."""
        best = start
        track = lower is not None

        def clique(cand: int, size: int, members: int) -> None:
            nonlocal best
            self._tick()
            if not cand:
                if size > best:
                    best = size
                    if track:
                        while members:
                            low = members & -members
                            members ^= low
                            w = low.bit_length() - 1
                            if lower[w] < size:
                                lower[w] = size
                return
            while cand:
                if size + cand.bit_count() <= best:
                    return
                low = cand & -cand
                cand ^= low
                u = low.bit_length() - 1
                clique(cand & self._nprime(u, best), size + 1, members | low)

        clique(self.masks[v], 1, 1 << v)
        return best


def max_clique_size(g: Graph, *, nprime_filter: str = "w", budget: float | None = None) -> int:
    """Size of a maximum clique (0 for the empty graph)."""
    deadline = time.monotonic() + budget if budget is not None else None
    return _Search(g, nprime_filter, deadline).max_clique()


def _sizes_for(args) -> list[int]:
    g, vertices, nprime_filter, deadline = args
    search = _Search(g, nprime_filter, deadline)
    return [search.vertex_clique(v) for v in vertices]


def maximal_clique_sizes(
    g: Graph,
    *,
    nprime_filter: str = "w",
    reuse_bounds: bool = False,
    workers: int = 1,
    budget: float | None = None,
) -> CliqueReport:
    """Size of the largest clique containing each vertex.

    Each vertex is searched from a bound of 0, independently of the others.
    ``reuse_bounds=True`` instead starts each vertex at the largest clique
    already found through it, which prunes more but visits the same optimum.
    ``workers > 1`` splits vertices across processes (independent searches,
    so the result does not depend on scheduling).
    """
    deadline = time.monotonic() + budget if budget is not None else None
    n = g.n
    if workers > 1 and not reuse_bounds and n > 1:
        chunks = [list(range(i, n, workers)) for i in range(workers)]
        sizes = [0] * n
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_sizes_for, [(g, c, nprime_filter, deadline) for c in chunks])
            for chunk, res in zip(chunks, results):
                for v, s in zip(chunk, res):
                    sizes[v] = s
        return CliqueReport.from_sizes(sizes)

    search = _Search(g, nprime_filter, deadline)
    sizes: list[int | None] = [None] * n
    lower = [0] * n if reuse_bounds else None
    try:
        for v in range(n):
            if reuse_bounds:
                sizes[v] = search.vertex_clique(v, start=lower[v], lower=lower)
                lower[v] = sizes[v]
            else:
                sizes[v] = search.vertex_clique(v)
    except CliqueBudgetExceeded as exc:
        exc.partial = sizes
        raise
    return CliqueReport.from_sizes(sizes)


def enumerate_maximal_cliques(g: Graph):
    """Yield every maximal clique as a frozenset (Bron-Kerbosch with pivoting)."""
    adj = [set(g.neighbors(v)) for v in range(g.n)]

    def expand(r: set, p: set, x: set):
        if not p and not x:
            yield frozenset(r)
            return
        pivot = max(p | x, key=lambda w: len(adj[w] & p))
        for v in list(p - adj[pivot]):
            yield from expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    yield from expand(set(), set(range(g.n)), set())


def oracle_maximal_clique_sizes(g: Graph) -> CliqueReport:
    """Per-vertex sizes by exhaustive maximal-clique enumeration (small graphs only)."""
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle is limited to n <= {ORACLE_MAX_N}, got n={g.n}")
    sizes = [0] * g.n
    for c in enumerate_maximal_cliques(g):
        for v in c:
            sizes[v] = max(sizes[v], len(c))
    return CliqueReport.from_sizes(sizes)
