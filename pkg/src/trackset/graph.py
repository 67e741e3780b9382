"""Graph and digraph representations plus the traversal primitives.

Vertices are dense integer ids 0..n-1. Both graph types are immutable
after construction and all operations here are pure.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence, Tuple

from .errors import CycleError


class Graph:
    """Simple undirected s-t graph.

    Rejects self-loops, duplicate edges, out-of-range endpoints and s == t
    at construction time.
    """

    __slots__ = ("n", "edges", "s", "t", "adj")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]], s: int, t: int):
        if n < 2:
            raise ValueError("need at least two vertices (s and t)")
        if not (0 <= s < n and 0 <= t < n):
            raise ValueError("s and t must be vertex ids below n")
        if s == t:
            raise ValueError("s and t must differ")
        seen = set()
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: {u} {v}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e[0]} {e[1]}")
            seen.add(e)
            norm.append(e)
        self.n = n
        self.edges = tuple(sorted(norm))
        self.s = s
        self.t = t
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)}, s={self.s}, t={self.t})"


class Digraph:
    """Simple directed s-t graph with in/out adjacency.

    Acyclicity is not enforced here; use :func:`topological_order`, which
    reports a cycle, so that parsers can reject cyclic input explicitly.
    """

    __slots__ = ("n", "arcs", "s", "t", "out_adj", "in_adj")

    def __init__(self, n: int, arcs: Iterable[Tuple[int, int]], s: int, t: int):
        if n < 2:
            raise ValueError("need at least two vertices (s and t)")
        if not (0 <= s < n and 0 <= t < n):
            raise ValueError("s and t must be vertex ids below n")
        if s == t:
            raise ValueError("s and t must differ")
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc endpoint out of range: {u} {v}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc {u} {v}")
            seen.add((u, v))
        self.n = n
        self.arcs = tuple(sorted(seen))
        self.s = s
        self.t = t
        out_adj = [[] for _ in range(n)]
        in_adj = [[] for _ in range(n)]
        for u, v in self.arcs:
            out_adj[u].append(v)
            in_adj[v].append(u)
        self.out_adj = tuple(tuple(sorted(a)) for a in out_adj)
        self.in_adj = tuple(tuple(sorted(a)) for a in in_adj)

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def degree(self, v: int) -> int:
        return len(self.out_adj[v]) + len(self.in_adj[v])

    def __repr__(self):
        return f"Digraph(n={self.n}, m={len(self.arcs)}, s={self.s}, t={self.t})"


class VertexRelabeling:
    """Injective map from reduced-graph vertex ids back to original ids."""

    __slots__ = ("to_original",)

    def __init__(self, to_original: Sequence[int]):
        self.to_original = tuple(to_original)
        if len(set(self.to_original)) != len(self.to_original):
            raise ValueError("relabeling must be injective")

    @staticmethod
    def identity(n: int) -> "VertexRelabeling":
        return VertexRelabeling(range(n))

    def original(self, v: int) -> int:
        return self.to_original[v]

    def map_set(self, vertices: Iterable[int]) -> frozenset:
        return frozenset(self.to_original[v] for v in vertices)

    def compose(self, inner: "VertexRelabeling") -> "VertexRelabeling":
        """self maps mid->orig, inner maps new->mid; result maps new->orig."""
        return VertexRelabeling(self.to_original[v] for v in inner.to_original)

    def __len__(self):
        return len(self.to_original)

    def __repr__(self):
        return f"VertexRelabeling({list(self.to_original)})"


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Shortest-path distance from ``source`` to every vertex, None if unreachable."""
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def topological_order(d: Digraph) -> list[int]:
    """Kahn's algorithm; raises CycleError if the digraph is not a DAG."""
    indeg = [d.in_degree(v) for v in range(d.n)]
    queue = deque(v for v in range(d.n) if indeg[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in d.out_adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if len(order) != d.n:
        raise CycleError("digraph contains a cycle")
    return order


def level_of(g: Graph) -> list[Optional[int]]:
    """Level of each vertex: its BFS distance from s."""
    return bfs_distances(g, g.s)
