"""Classification of underlying graphs into the families studied here:
maximum degree, girth, degeneracy, diameter, partial 2-trees (K4-minor-free
graphs) and planarity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import networkx as nx

from .core import UnderlyingGraph


@dataclass(frozen=True)
class FamilyProfile:
    max_degree: int
    girth: int | None  # None means acyclic
    degeneracy: int
    diameter: int | None  # None means disconnected
    is_partial_2_tree: bool
    is_planar: bool

    def lines(self) -> list[str]:
        return [
            f"max_degree={self.max_degree}",
            f"girth={'acyclic' if self.girth is None else self.girth}",
            f"degeneracy={self.degeneracy}",
            f"diameter={'disconnected' if self.diameter is None else self.diameter}",
            f"is_partial_2_tree={str(self.is_partial_2_tree).lower()}",
            f"is_planar={str(self.is_planar).lower()}",
        ]


def max_degree(graph: UnderlyingGraph) -> int:
    if graph.vertex_count == 0:
        return 0
    return max(graph.degree(u) for u in range(graph.vertex_count))


def girth(graph: UnderlyingGraph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    BFS from every vertex; a non-tree edge met at depth d closes a cycle of
    length at most dist[x] + dist[y] + 1, and for a root on a shortest
    cycle this is exact.
    """
    n = graph.vertex_count
    best: int | None = None
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] >= best:
                break
            for y in graph.neighbors(x):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def degeneracy_ordering(graph: UnderlyingGraph) -> tuple[int, list[int]]:
    """(degeneracy, peeling order) by repeated minimum-degree removal."""
    n = graph.vertex_count
    degree = [graph.degree(u) for u in range(n)]
    removed = [False] * n
    order: list[int] = []
    worst = 0
    for _ in range(n):
        v = min(
            (u for u in range(n) if not removed[u]),
            key=lambda u: (degree[u], u),
        )
        worst = max(worst, degree[v])
        removed[v] = True
        order.append(v)
        for w in graph.neighbors(v):
            if not removed[w]:
                degree[w] -= 1
    return worst, order


def degeneracy(graph: UnderlyingGraph) -> int:
    return degeneracy_ordering(graph)[0]


def diameter(graph: UnderlyingGraph) -> int | None:
    """Maximum BFS eccentricity, or None if the graph is disconnected."""
    n = graph.vertex_count
    if n == 0:
        return 0
    best = 0
    for root in range(n):
        dist = [-1] * n
        dist[root] = 0
        queue = deque([root])
        seen = 1
        while queue:
            x = queue.popleft()
            for y in graph.neighbors(x):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    seen += 1
                    queue.append(y)
        if seen < n:
            return None
        best = max(best, max(dist))
    return best


def is_partial_2_tree(graph: UnderlyingGraph) -> bool:
    """True iff the graph has no K4 minor.

    Series-parallel reduction on a multigraph scratch copy: delete
    degree-<=1 vertices, collapse parallel edges, suppress degree-2
    vertices.  The reductions are Church-Rosser, so a vertex-id work queue
    keeps the run deterministic without affecting the outcome.  A graph
    reduces to nothing iff it is K4-minor-free.
    """
    n = graph.vertex_count
    # multiplicity[u][v] = number of parallel edges in the scratch multigraph
    mult: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v in graph.edges:
        mult[u][v] = 1
        mult[v][u] = 1
    alive = set(range(n))
    queue = deque(sorted(alive))
    queued = set(queue)

    def requeue(v: int) -> None:
        if v in alive and v not in queued:
            queue.append(v)
            queued.add(v)

    while queue:
        v = queue.popleft()
        queued.discard(v)
        if v not in alive:
            continue
        nbrs = mult[v]
        # parallel reduction at v first, so degree counts single edges
        for w in list(nbrs):
            if nbrs[w] > 1:
                nbrs[w] = 1
                mult[w][v] = 1
                requeue(w)
        deg = sum(nbrs.values())
        if deg <= 1:
            for w in list(nbrs):
                del mult[w][v]
                requeue(w)
            nbrs.clear()
            alive.discard(v)
        elif deg == 2:
            a, b = nbrs
            del mult[a][v]
            del mult[b][v]
            nbrs.clear()
            alive.discard(v)
            mult[a][b] = mult[a].get(b, 0) + 1
            mult[b][a] = mult[a][b]
            requeue(a)
            requeue(b)
    return not alive


def is_planar(graph: UnderlyingGraph) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    g.add_edges_from(graph.edges)
    ok, _ = nx.check_planarity(g)
    return ok


def family_profile(graph: UnderlyingGraph) -> FamilyProfile:
    return FamilyProfile(
        max_degree=max_degree(graph),
        girth=girth(graph),
        degeneracy=degeneracy(graph),
        diameter=diameter(graph),
        is_partial_2_tree=is_partial_2_tree(graph),
        is_planar=is_planar(graph),
    )


def has_k4_subdivision(graph: UnderlyingGraph) -> bool:
    """Exact K4-minor oracle via subdivision search.

    K4 has maximum degree 3, so a K4 minor exists iff a K4 subdivision
    does: four branch vertices pairwise joined by internally disjoint
    paths.  Branch vertices need degree >= 3 in the host.
    """
    from itertools import combinations

    candidates = [v for v in range(graph.vertex_count) if graph.degree(v) >= 3]
    for branch in combinations(candidates, 4):
        bset = set(branch)
        pairs = list(combinations(branch, 2))

        def connect(i: int, used: frozenset[int]) -> bool:
            if i == len(pairs):
                return True
            a, b = pairs[i]

            def walk(x: int, internals: frozenset[int]) -> bool:
                if graph.adjacent(x, b) and connect(i + 1, used | internals):
                    return True
                for w in graph.neighbors(x):
                    if w == b or w in bset or w in used or w in internals:
                        continue
                    if walk(w, internals | {w}):
                        return True
                return False

            return walk(a, frozenset())

        if connect(0, frozenset()):
            return True
    return False


def has_k4_minor_bruteforce(graph: UnderlyingGraph) -> bool:
    """Independent oracle for is_partial_2_tree on small graphs.

    Enumerates assignments of vertices to four branch sets (or none) and
    accepts when all four are non-empty, connected, and pairwise joined by
    an edge.  Exponential; intended for <= 7 vertices (has_k4_subdivision
    scales further).
    """
    n = graph.vertex_count

    def connected(block: list[int]) -> bool:
        todo = [block[0]]
        seen = {block[0]}
        members = set(block)
        while todo:
            x = todo.pop()
            for y in graph.neighbors(x):
                if y in members and y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(members)

    def joined(a: list[int], b: list[int]) -> bool:
        return any(graph.adjacent(x, y) for x in a for y in b)

    assign = [-1] * n

    def extend(v: int) -> bool:
        if v == n:
            blocks = [[x for x in range(n) if assign[x] == i] for i in range(4)]
            if any(not b for b in blocks):
                return False
            if any(not connected(b) for b in blocks):
                return False
            return all(
                joined(blocks[i], blocks[j]) for i in range(4) for j in range(i + 1, 4)
            )
        for choice in range(-1, 4):
            assign[v] = choice
            if extend(v + 1):
                return True
        assign[v] = -1
        return False

    return extend(0)
