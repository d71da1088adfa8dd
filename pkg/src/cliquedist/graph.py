"""Immutable simple undirected graph over dense integer vertex ids."""

from __future__ import annotations

from collections.abc import Iterable


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, out-of-range ids)."""


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Neighbor lists are kept sorted so that every traversal is deterministic.
    Instances are never mutated after construction.
    """

    __slots__ = ("n", "m", "labels", "_nbrs", "_sets", "_masks")

    def __init__(self, n: int, adjacency: list[tuple[int, ...]], labels: tuple[str, ...] | None = None):
        # use Graph.build(); this trusts its input
        self.n = n
        self.labels = labels
        self._nbrs = adjacency
        self._sets = [frozenset(a) for a in adjacency]
        self.m = sum(len(a) for a in adjacency) // 2
        self._masks: list[int] | None = None

    @classmethod
    def build(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: tuple[str, ...] | None = None
    ) -> Graph:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, [tuple(sorted(a)) for a in adj], labels)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._nbrs[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending id order."""
        self._check(v)
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degrees(self) -> list[int]:
        return [len(a) for a in self._nbrs]

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: pairs ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in self._nbrs[i] if i < j]

    def neighbor_masks(self) -> list[int]:
        """Neighborhoods as int bitsets (bit ``j`` set iff ``j`` is a neighbor)."""
        if self._masks is None:
            masks = []
            for a in self._nbrs:
                mask = 0
                for j in a:
                    mask |= 1 << j
                masks.append(mask)
            self._masks = masks
        return self._masks

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.build(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._nbrs)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __getstate__(self):
        return (self.n, self._nbrs, self.labels)

    def __setstate__(self, state):
        Graph.__init__(self, *state)


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.build(n, edges)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def neighbors(g: Graph, v: int) -> tuple[int, ...]:
    return g.neighbors(v)


def complete_graph(n: int) -> Graph:
    return Graph.build(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.build(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.build(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to vertices ``1..leaves``."""
    return Graph.build(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
