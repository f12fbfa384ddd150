"""The "sees" relation, the seeing graph, and the quotient-merge oracle.

Two vertices see each other when they are adjacent or joined by a special
2-path, i.e. a path u-w-v whose two adjacencies carry different signed
labels at w.  The seeing graph collects all seeing pairs.  Independently of
that shortcut, mergeable_oracle decides by exhaustive partition search
whether some homomorphism to some (m,n)-graph can identify two vertices;
the two must always disagree (a pair is forced apart exactly when it sees).
"""

from __future__ import annotations

from .core import CapacityError, InputError, MixedGraph, UnderlyingGraph

DEFAULT_PARTITION_LIMIT = 10


def _check_vertices(graph: MixedGraph, *vertices: int) -> None:
    for x in vertices:
        if not 0 <= x < graph.vertex_count:
            raise InputError(f"vertex {x} outside 0..{graph.vertex_count - 1}")


def is_special_two_path(graph: MixedGraph, u: int, w: int, v: int) -> bool:
    """True iff u-w-v is a 2-path whose labels differ, read from w."""
    _check_vertices(graph, u, w, v)
    if u == w or v == w or u == v:
        raise InputError(f"vertices must be distinct, got ({u}, {w}, {v})")
    a = graph.sigma(w, u)
    if a is None:
        return False
    b = graph.sigma(w, v)
    return b is not None and a != b


def sees(graph: MixedGraph, u: int, v: int) -> bool:
    """True iff u and v are adjacent or some special 2-path joins them."""
    _check_vertices(graph, u, v)
    if u == v:
        raise InputError(f"sees is defined for distinct vertices, got {u} twice")
    labels_u = graph.neighbor_labels(u)
    if v in labels_u:
        return True
    labels_v = graph.neighbor_labels(v)
    if len(labels_v) < len(labels_u):
        labels_u, labels_v = labels_v, labels_u
        u, v = v, u
    for w, s in labels_u.items():
        t = graph.neighbor_labels(w).get(v)
        if t is not None and t != graph.sigma(w, u):
            return True
    return False


class SeeingGraph:
    """Undirected graph on V(G) whose edges are exactly the seeing pairs.

    Rows are bitmasks, so dense queries from the solvers stay cheap.
    """

    __slots__ = ("vertex_count", "masks")

    def __init__(self, vertex_count: int, masks: tuple[int, ...]) -> None:
        self.vertex_count = vertex_count
        self.masks = masks

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.vertex_count)
            for v in range(u + 1, self.vertex_count)
            if self.masks[u] >> v & 1
        ]

    def degree(self, u: int) -> int:
        return bin(self.masks[u]).count("1")

    def as_underlying(self) -> UnderlyingGraph:
        return UnderlyingGraph(self.vertex_count, self.edges)


def seeing_graph(graph: MixedGraph) -> SeeingGraph:
    """Materialize all seeing pairs of the graph.

    Walks each midpoint once: neighbors with different labels at w form
    special 2-paths, so grouping N(w) by sigma(w, .) yields every pair.
    """
    n = graph.vertex_count
    masks = [0] * n
    for w in range(n):
        labels = graph.neighbor_labels(w)
        full = 0
        groups: dict[int, int] = {}
        for x, s in labels.items():
            bit = 1 << x
            full |= bit
            masks[w] |= bit
            masks[x] |= 1 << w
            groups[s] = groups.get(s, 0) | bit
        # neighbors of w in different label groups are special-2-path pairs;
        # both directions get set because "different group" is symmetric
        for same in groups.values():
            others = full & ~same
            if not others:
                continue
            rest = same
            while rest:
                bit = rest & -rest
                rest ^= bit
                masks[bit.bit_length() - 1] |= others
    return SeeingGraph(n, tuple(masks))


class QuotientState:
    """Incremental builder of valid quotient partitions.

    A partition is a valid quotient iff no block contains an adjacent pair
    and any two blocks are joined by at most one adjacency type; those are
    exactly the homomorphic images of the graph.  Placements are journaled
    so searches can backtrack in O(1) per step.
    """

    __slots__ = ("graph", "block_of", "members", "pair_label")

    def __init__(self, graph: MixedGraph) -> None:
        self.graph = graph
        self.block_of = [-1] * graph.vertex_count
        self.members: list[list[int]] = []
        # pair_label[(b, c)] = established sigma read from block b toward c
        self.pair_label: dict[tuple[int, int], int] = {}

    def block_count(self) -> int:
        return len(self.members)

    def open_block(self) -> None:
        self.members.append([])

    def close_block(self) -> None:
        if self.members[-1]:
            raise AssertionError("close_block on a non-empty block")
        self.members.pop()

    def try_place(self, x: int, b: int) -> list[tuple[int, int]] | None:
        """Place x into block b; returns an undo journal, or None if invalid."""
        labels = self.graph.neighbor_labels(x)
        for y in self.members[b]:
            if y in labels:
                return None
        journal: list[tuple[int, int]] = []
        for y, s in labels.items():
            c = self.block_of[y]
            if c < 0 or c == b:
                continue
            known = self.pair_label.get((b, c))
            if known is None:
                self.pair_label[(b, c)] = s
                self.pair_label[(c, b)] = self.graph.sigma(y, x)
                journal.append((b, c))
                journal.append((c, b))
            elif known != s:
                for key in journal:
                    del self.pair_label[key]
                return None
        self.members[b].append(x)
        self.block_of[x] = b
        return journal

    def unplace(self, x: int, b: int, journal: list[tuple[int, int]]) -> None:
        self.members[b].pop()
        self.block_of[x] = -1
        for key in journal:
            del self.pair_label[key]


def mergeable_oracle(
    graph: MixedGraph, u: int, v: int, max_vertices: int = DEFAULT_PARTITION_LIMIT
) -> bool:
    """Ground truth for the seeing shortcut, by exhaustive quotient search.

    Searches all partitions of V(G) that put u and v in one block for a
    valid quotient, returning True iff one exists, i.e. iff some
    homomorphism to some (m,n)-graph merges u and v.
    """
    _check_vertices(graph, u, v)
    if u == v:
        raise InputError(f"mergeable_oracle needs distinct vertices, got {u} twice")
    n = graph.vertex_count
    if n > max_vertices:
        raise CapacityError(
            f"partition search over {n} vertices exceeds the limit of {max_vertices}"
        )
    # Place u then v first so the forced merge is block 0 of every
    # restricted-growth assignment.
    order = [u, v] + [x for x in range(n) if x != u and x != v]
    state = QuotientState(graph)

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        x = order[pos]
        choices = 1 if pos == 1 else state.block_count() + 1  # v forced into block 0
        for b in range(choices):
            fresh = b == state.block_count()
            if fresh:
                state.open_block()
            journal = state.try_place(x, b)
            if journal is not None:
                if extend(pos + 1):
                    return True
                state.unplace(x, b, journal)
            if fresh:
                state.close_block()
        return False

    return extend(0)
