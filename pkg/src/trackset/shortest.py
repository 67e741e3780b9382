"""Tracking shortest s-t paths in undirected graphs.

The pipeline prunes everything off shortest paths (which leaves a layered
graph), then either enumerates the paths into a set system or orients the
edges towards t and hands the resulting DAG to the DAG solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .dagtrack import solve_dag
from .errors import CapExceeded, NoPathError
from .graph import Digraph, Graph, VertexRelabeling, bfs_distances
from .report import SolveReport
from .setsystem import SetSystem, tracks


@dataclass
class LayeredGraph:
    """A graph pruned to its shortest s-t paths.

    Every edge joins consecutive BFS levels and every vertex and edge lies
    on some shortest s-t path. ``length`` is the shortest s-t distance.
    """

    base: Graph
    levels: Tuple[int, ...]
    length: int


def reduce_rule_1(g: Graph) -> Tuple[LayeredGraph, VertexRelabeling]:
    """Delete every vertex and edge not on a shortest s-t path.

    An edge ab survives iff dis(s,a) + dis(b,t) + 1 equals the shortest
    s-t distance (in either orientation). Raises NoPathError when t is
    unreachable from s.
    """
    ds = bfs_distances(g, g.s)
    dt = bfs_distances(g, g.t)
    length = ds[g.t]
    if length is None:
        raise NoPathError("t is unreachable from s")

    def on_shortest(a: int, b: int) -> bool:
        return ds[a] is not None and dt[b] is not None and ds[a] + dt[b] + 1 == length

    kept = [(a, b) for a, b in g.edges if on_shortest(a, b) or on_shortest(b, a)]
    alive = sorted({v for e in kept for v in e})
    newid = {old: i for i, old in enumerate(alive)}
    base = Graph(len(alive), [(newid[a], newid[b]) for a, b in kept],
                 newid[g.s], newid[g.t])
    levels = tuple(ds[old] for old in alive)
    return LayeredGraph(base, levels, length), VertexRelabeling(alive)


def enumerate_shortest_paths(lg: LayeredGraph, cap: Optional[int] = None
                             ) -> List[Tuple[int, ...]]:
    """All shortest s-t paths, built level by level from s.

    Paths are emitted in lexicographic order of predecessor choice per
    level. Raises CapExceeded (carrying the count reached) once more than
    ``cap`` paths materialize; every partial count is a lower bound on the
    s-t total, so the abort is sound.
    """
    g = lg.base
    by_level: dict[int, list[int]] = {}
    for v in range(g.n):
        by_level.setdefault(lg.levels[v], []).append(v)
    paths_to: dict[int, list[tuple]] = {g.s: [(g.s,)]}
    for level in range(1, lg.length + 1):
        for v in sorted(by_level.get(level, [])):
            preds = [u for u in g.adj[v] if lg.levels[u] == level - 1]
            acc = []
            for u in sorted(preds):
                for p in paths_to.get(u, []):
                    acc.append(p + (v,))
                    if cap is not None and len(acc) > cap:
                        raise CapExceeded(len(acc))
            paths_to[v] = acc
    return paths_to.get(g.t, [])


def to_set_system(paths: List[Tuple[int, ...]], n: int) -> SetSystem:
    """One family set per shortest path's vertex set, over an n-element universe."""
    family = [frozenset(p) for p in paths]
    d = max((len(f) for f in family), default=None)
    return SetSystem(n, family, d=d)


def to_dag(lg: LayeredGraph) -> Digraph:
    """Orient every edge of the layered graph towards t (lower to higher level).

    The s-t paths of the result are exactly the shortest s-t paths of the
    input.
    """
    g = lg.base
    arcs = []
    for a, b in g.edges:
        if lg.levels[a] < lg.levels[b]:
            arcs.append((a, b))
        else:
            arcs.append((b, a))
    return Digraph(g.n, arcs, g.s, g.t)


def solve_shortest_paths(g: Graph, k: int, cap: Optional[int] = None) -> SolveReport:
    """Tracking set of size <= k for all shortest s-t paths, or NO.

    Dispatches through the DAG solver. When the shortest paths can be
    enumerated within the cap (default 2^k + 1), any YES witness is
    re-checked against the enumerated family. Witness ids are original.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    try:
        lg, relab = reduce_rule_1(g)
    except NoPathError:
        return SolveReport("YES", witness=(), paths=0,
                           reason="no s-t path; zero paths are vacuously tracked")
    rep = solve_dag(to_dag(lg), k)
    witness = rep.witness
    if witness is not None:
        try:
            paths = enumerate_shortest_paths(lg, cap if cap is not None else 2 ** k + 1)
            assert tracks([frozenset(p) for p in paths], frozenset(witness))
        except CapExceeded:
            pass
        witness = tuple(sorted(relab.map_set(witness)))
    return SolveReport(rep.result, witness=witness, paths=rep.paths,
                       paths_saturated=rep.paths_saturated,
                       reductions=rep.reductions + (g.n - lg.base.n),
                       subsets_tried=rep.subsets_tried, reason=rep.reason)
