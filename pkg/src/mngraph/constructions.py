"""Builders for every extremal witness used by the verification suites,
plus a constructive (Delta+1)-edge-coloring.

All builders are deterministic and document their vertex numbering, so
fixtures reproduce bit-exactly.  "Distinct adjacency types" always follows
the canonical type order: arc-out 1..m, arc-in 1..m, then edge types.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InputError, MixedGraph, UnderlyingGraph, canonical_types, record_for
from .generators import cycle_graph, petersen_graph, wagner_graph
from .recognizers import diameter, max_degree
from .solvers import is_absolute_clique


@dataclass(frozen=True)
class EdgeColoring:
    """Proper edge coloring; colors are 1..Delta+1."""

    colors: dict[tuple[int, int], int]

    def color_count(self) -> int:
        return len(set(self.colors.values()))


def is_proper_edge_coloring(graph: UnderlyingGraph, coloring: EdgeColoring) -> bool:
    if set(coloring.colors) != set(graph.edges):
        return False
    for v in range(graph.vertex_count):
        seen = set()
        for w in graph.neighbors(v):
            c = coloring.colors[(min(v, w), max(v, w))]
            if c in seen:
                return False
            seen.add(c)
    return True


def build_vizing_edge_coloring(graph: UnderlyingGraph) -> EdgeColoring:
    """Proper edge coloring with at most Delta+1 colors, constructively.

    Misra-Gries realization of Vizing's theorem: edges that have no common
    free color at their endpoints are handled by building a maximal fan at
    the lower-id endpoint, inverting the two-colored Kempe path, and
    rotating a prefix of the fan.  Free colors are always chosen smallest
    first.
    """
    n = graph.vertex_count
    K = max_degree(graph) + 1
    full = (1 << K) - 1
    used = [0] * n  # bitmask of colors present at each vertex
    col: dict[tuple[int, int], int] = {}

    def color_of(a: int, b: int) -> int:
        return col.get((a, b) if a < b else (b, a), -1)

    def recompute_used(v: int) -> None:
        mask = 0
        for w in graph.neighbors(v):
            c = color_of(v, w)
            if c >= 0:
                mask |= 1 << c
        used[v] = mask

    def smallest_free(v: int) -> int:
        free = ~used[v] & full
        return (free & -free).bit_length() - 1

    def invert_path(x: int, c: int, d: int) -> None:
        """Swap colors c and d along the maximal cd-path starting at x.

        The chain is collected first and the masks rebuilt afterwards;
        recoloring in place would transiently corrupt the used sets.
        """
        chain: list[tuple[int, int]] = []
        prev = x
        want = d
        while True:
            nxt = -1
            for w in graph.neighbors(prev):
                if color_of(prev, w) == want:
                    nxt = w
                    break
            if nxt < 0:
                break
            chain.append((prev, nxt))
            prev = nxt
            want = d if want == c else c
        touched = {x}
        for a, b in chain:
            key = (a, b) if a < b else (b, a)
            col[key] = d if col[key] == c else c
            touched.update((a, b))
        for v in touched:
            recompute_used(v)

    for u, v in graph.edges:
        common = ~used[u] & ~used[v] & full
        if common:
            bit = common & -common
            col[(u, v)] = bit.bit_length() - 1
            used[u] |= bit
            used[v] |= bit
            continue
        x = u  # anchor at the lower-id endpoint
        fan = [v]
        in_fan = {v}
        while True:
            want = ~used[fan[-1]] & full
            grown = False
            for w in sorted(graph.neighbors(x)):
                c = color_of(x, w)
                if w not in in_fan and c >= 0 and want >> c & 1:
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
            if not grown:
                break
        c = smallest_free(x)
        d = smallest_free(fan[-1])
        if used[x] >> d & 1:
            invert_path(x, c, d)
            if used[x] >> d & 1:
                raise AssertionError("Kempe inversion failed to free the fan color")
        # shortest fan prefix ending at a vertex where d is free
        j = -1
        for i, w in enumerate(fan):
            if i > 0:
                cw = color_of(x, w)
                if cw < 0 or used[fan[i - 1]] >> cw & 1:
                    break  # prefix beyond i is no longer a fan
            if not (used[w] >> d & 1):
                j = i
                break
        if j < 0:
            raise AssertionError("no rotatable fan prefix; fan invariant violated")
        shifted = [color_of(x, fan[i + 1]) for i in range(j)]
        for i in range(j):
            key = (x, fan[i]) if x < fan[i] else (fan[i], x)
            col[key] = shifted[i]
        key = (x, fan[j]) if x < fan[j] else (fan[j], x)
        col[key] = d
        recompute_used(x)
        for w in fan[: j + 1]:
            recompute_used(w)

    return EdgeColoring({e: c + 1 for e, c in col.items()})


def admits_proper_edge_coloring(graph: UnderlyingGraph, k: int) -> bool:
    """Exhaustive search for a proper edge coloring with at most k colors."""
    edges = list(graph.edges)
    used = [0] * graph.vertex_count

    def extend(idx: int, palette: int) -> bool:
        if idx == len(edges):
            return True
        u, v = edges[idx]
        taken = used[u] | used[v]
        for c in range(min(palette + 1, k)):  # new colors in first-use order
            bit = 1 << c
            if taken & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            if extend(idx + 1, max(palette, c + 1)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
        return False

    return extend(0, 0)


def _orient_degree2_component(
    comp_edges: list[tuple[int, int]]
) -> list[tuple[int, int]]:
    """Orient a path or cycle consistently; deterministic by vertex ids.

    Paths start from their lower-id endpoint; cycles start at their
    lowest-id vertex toward its lower-id neighbor.
    """
    adj: dict[int, list[int]] = {}
    for a, b in comp_edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    endpoints = sorted(v for v, nb in adj.items() if len(nb) == 1)
    if endpoints:
        start = endpoints[0]
        nxt = adj[start][0]
    else:
        start = min(adj)
        nxt = min(adj[start])
    oriented = [(start, nxt)]
    prev, cur = start, nxt
    while cur != start and len(adj[cur]) == 2:
        a, b = adj[cur]
        nxt = b if a == prev else a
        oriented.append((cur, nxt))
        prev, cur = cur, nxt
    return oriented


def build_from_diameter2(graph: UnderlyingGraph, m: int, n: int) -> MixedGraph:
    """Convert a diameter-<=2 graph into an absolute clique, given Delta < 2m+n.

    A proper (Delta+1)-edge-coloring is split as 2*m1 + n1 = Delta+1 with
    m1 = min(m, (Delta+1)//2): color classes (2i-1, 2i) form degree-<=2
    subgraphs oriented as directed paths/cycles with arc label i, and each
    leftover class is a matching realized as the adjacency type of label
    m1+j (an arc oriented low id -> high id, or an edge).  Every vertex
    then meets each of its neighbors by a distinct adjacency type.
    """
    diam = diameter(graph)
    if diam is None or diam > 2:
        raise InputError(f"diameter must be at most 2, got {diam or 'disconnected'}")
    delta = max_degree(graph)
    if delta >= 2 * m + n:
        raise InputError(
            f"max degree must satisfy Delta < 2m+n, got Delta={delta}, 2m+n={2 * m + n}"
        )
    coloring = build_vizing_edge_coloring(graph)
    classes: dict[int, list[tuple[int, int]]] = {}
    for edge, c in coloring.colors.items():
        classes.setdefault(c, []).append(edge)
    m1 = min(m, (delta + 1) // 2)
    n1 = delta + 1 - 2 * m1

    arcs: list[tuple[int, int, int]] = []
    edges: list[tuple[int, int, int]] = []
    for i in range(1, m1 + 1):
        paired = sorted(classes.get(2 * i - 1, []) + classes.get(2 * i, []))
        adj: dict[int, list[tuple[int, int]]] = {}
        for e in paired:
            adj.setdefault(e[0], []).append(e)
            adj.setdefault(e[1], []).append(e)
        remaining = set(paired)
        while remaining:
            comp = [min(remaining)]
            remaining.discard(comp[0])
            queue = [comp[0]]
            while queue:
                e = queue.pop()
                for x in e:
                    for e2 in adj[x]:
                        if e2 in remaining:
                            remaining.discard(e2)
                            comp.append(e2)
                            queue.append(e2)
            for tail, head in _orient_degree2_component(comp):
                arcs.append((tail, head, i))
    for j in range(1, n1 + 1):
        label = m1 + j
        for u, v in sorted(classes.get(2 * m1 + j, [])):
            if label <= m:
                arcs.append((u, v, label))
            else:
                edges.append((u, v, label))
    return MixedGraph(m, n, graph.vertex_count, arcs, edges)


def _check_mn_allowed(m: int, n: int) -> None:
    if (m, n) in ((0, 0), (0, 1)):
        raise InputError(f"(m, n) = ({m}, {n}) is excluded")


def build_star(m: int, n: int) -> MixedGraph:
    """Star with 2m+n leaves, each meeting the center by a distinct type.

    The center is vertex 0 and leaf j (1-based) realizes the j-th canonical
    adjacency type read from the center.
    """
    _check_mn_allowed(m, n)
    p = 2 * m + n
    arcs, edges = [], []
    for j, sym in enumerate(canonical_types(m, n), start=1):
        kind, a, b, label = record_for(0, j, sym, m)
        (arcs if kind == "arc" else edges).append((a, b, label))
    return MixedGraph(m, n, p + 1, arcs, edges)


def build_partial2tree_extremal(m: int, n: int) -> MixedGraph:
    """Absolute clique of order (2m+n)^2 + (2m+n) + 1 on a partial 2-tree.

    2m+n star copies hang off an apex: vertex 0 is the apex, copy k
    occupies vertices 1+k(p+1)..(k+1)(p+1) with its center first, and the
    apex meets every vertex of copy k by the k-th canonical type.
    """
    _check_mn_allowed(m, n)
    p = 2 * m + n
    symbols = canonical_types(m, n)
    arcs, edges = [], []

    def add(x: int, y: int, sym: int) -> None:
        kind, a, b, label = record_for(x, y, sym, m)
        (arcs if kind == "arc" else edges).append((a, b, label))

    for k in range(p):
        base = 1 + k * (p + 1)
        for j in range(p):
            add(base, base + 1 + j, symbols[j])  # star copy, center = base
        for offset in range(p + 1):
            add(0, base + offset, symbols[k])  # apex sees copy k by type k
    return MixedGraph(m, n, p * (p + 1) + 1, arcs, edges)


def build_trianglefree_extremal(m: int, n: int) -> MixedGraph:
    """Absolute clique of order (2m+n)^2 + 2 on K_{2,(2m+n)^2}.

    The two high-degree vertices are 0 and 1; middle vertex k (from 2)
    realizes the k-th ordered pair of canonical types toward them.
    """
    _check_mn_allowed(m, n)
    p = 2 * m + n
    symbols = canonical_types(m, n)
    arcs, edges = [], []

    def add(x: int, y: int, sym: int) -> None:
        kind, a, b, label = record_for(x, y, sym, m)
        (arcs if kind == "arc" else edges).append((a, b, label))

    for t in range(p * p):
        a, b = divmod(t, p)
        add(0, 2 + t, symbols[a])
        add(1, 2 + t, symbols[b])
    return MixedGraph(m, n, p * p + 2, arcs, edges)


def build_petersen_11() -> MixedGraph:
    """The 10-vertex (1,1)-absolute clique on the Petersen graph.

    Outer cycle 0..4 as a directed cycle of arcs, inner pentagram 5..9
    (step two) as a directed cycle of arcs, and the five spokes as edges.
    The transcription is self-checked at build time; it must never be
    altered silently (rerun the labeling search if this ever fails).
    """
    arcs = [(i, (i + 1) % 5, 1) for i in range(5)]
    arcs += [(5 + i, 5 + (i + 2) % 5, 1) for i in range(5)]
    edges = [(i, i + 5, 2) for i in range(5)]
    graph = MixedGraph(1, 1, 10, arcs, edges)
    if not is_absolute_clique(graph):
        raise RuntimeError(
            "transcribed Petersen orientation is not an absolute clique; "
            "recover a labeling via labeling_search(petersen_graph(), 1, 1, 'absolute')"
        )
    return graph


def build_wagner_02() -> MixedGraph:
    """The 8-vertex (0,2)-absolute clique on the Wagner graph.

    8-cycle 0..7 with alternating labels (01, 23, 45, 67 of type 1 and
    12, 34, 56, 70 of type 2) plus antipodal chords 04, 26 of type 1 and
    15, 37 of type 2.
    """
    edges = []
    for i in range(0, 8, 2):
        edges.append((i, (i + 1) % 8, 1))
        edges.append((i + 1, (i + 2) % 8, 2))
    edges += [(0, 4, 1), (2, 6, 1), (1, 5, 2), (3, 7, 2)]
    return MixedGraph(0, 2, 8, edges=edges)


def build_c5_02() -> MixedGraph:
    """The (0,2)-labeled 5-cycle with relative clique number 4.

    Vertices 0..4 around the cycle; edges 01, 23, 40 carry label 1 and
    edges 12, 34 carry label 2.
    """
    edges = [(0, 1, 1), (2, 3, 1), (4, 0, 1), (1, 2, 2), (3, 4, 2)]
    return MixedGraph(0, 2, 5, edges=edges)


def build_girth5_planar_six(m: int, n: int) -> MixedGraph:
    """Planar girth-5 witness with six pairwise-seeing vertices.

    Vertices 0..4 form an absolute clique on the 5-cycle (via
    build_from_diameter2), vertex 5 is the apex, and helpers 6+i join the
    apex to cycle vertex i by a special 2-path labeled with the first two
    distinct canonical types.  Helpers are fresh vertices, so every new
    cycle has length at least 5.
    """
    if 2 * m + n < 3:
        raise InputError(f"need 2m+n >= 3, got 2m+n = {2 * m + n}")
    base = build_from_diameter2(cycle_graph(5), m, n)
    symbols = canonical_types(m, n)
    arcs = list(base.arc_records())
    edges = list(base.edge_records())

    def add(x: int, y: int, sym: int) -> None:
        kind, a, b, label = record_for(x, y, sym, m)
        (arcs if kind == "arc" else edges).append((a, b, label))

    for i in range(5):
        helper = 6 + i
        add(helper, 5, symbols[0])
        add(helper, i, symbols[1])
    return MixedGraph(m, n, 11, arcs, edges)


BUILDERS = {
    "star": build_star,
    "partial2tree_extremal": build_partial2tree_extremal,
    "trianglefree_extremal": build_trianglefree_extremal,
    "girth5_planar_six": build_girth5_planar_six,
    "petersen_11": build_petersen_11,
    "wagner_02": build_wagner_02,
    "c5_02": build_c5_02,
}

PARAMETRIC_BUILDERS = ("star", "partial2tree_extremal", "trianglefree_extremal", "girth5_planar_six")

__all__ = [
    "EdgeColoring",
    "BUILDERS",
    "PARAMETRIC_BUILDERS",
    "admits_proper_edge_coloring",
    "build_c5_02",
    "build_from_diameter2",
    "build_girth5_planar_six",
    "build_partial2tree_extremal",
    "build_petersen_11",
    "build_star",
    "build_trianglefree_extremal",
    "build_vizing_edge_coloring",
    "build_wagner_02",
    "is_proper_edge_coloring",
    "petersen_graph",
    "wagner_graph",
]
