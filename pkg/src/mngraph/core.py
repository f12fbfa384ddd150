"""Data model for (m,n)-colored mixed graphs.

An (m,n)-graph is a simple graph whose arcs carry one of m arc labels and
whose edges carry one of n edge labels.  Labels are stored through a signed
adjacency function sigma: for an arc u->v with label a (1 <= a <= m) we keep
sigma(u,v) = a and sigma(v,u) = -a; for an edge uv with label b
(m+1 <= b <= m+n) both directions store b.  Each vertex therefore relates to
a neighbor by one of 2m+n adjacency types, encoded as the signed value read
from that vertex:

    +1..+m   outgoing arc of that label
    -1..-m   incoming arc of that label
    m+1..m+n edge of that label

The canonical ordering of the 2m+n types is arc-out 1..m, arc-in 1..m,
then the edge types; constructions and labelings rely on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class InputError(ValueError):
    """Raised for arguments outside an operation's domain."""


class CapacityError(RuntimeError):
    """Raised when an exact search exceeds its configured size limit."""


class ParseError(ValueError):
    """Raised for malformed graph files; the message names the line."""


def adjacency_type_count(m: int, n: int) -> int:
    return 2 * m + n


def canonical_types(m: int, n: int) -> list[int]:
    """The 2m+n adjacency types as signed labels, in canonical order."""
    return list(range(1, m + 1)) + list(range(-1, -m - 1, -1)) + list(range(m + 1, m + n + 1))


def flip(label: int, m: int) -> int:
    """Label of the same adjacency read from the other endpoint."""
    return -label if abs(label) <= m else label


def _check_mn(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise InputError(f"m and n must be non-negative, got ({m}, {n})")


def record_for(x: int, y: int, signed: int, m: int) -> tuple[str, int, int, int]:
    """Arc/edge record realizing sigma(x, y) = signed.

    Returns ("arc", u, v, label) meaning an arc u->v, or ("edge", u, v, label).
    """
    if 1 <= signed <= m:
        return ("arc", x, y, signed)
    if -m <= signed <= -1:
        return ("arc", y, x, -signed)
    return ("edge", x, y, signed)


class MixedGraph:
    """Immutable (m,n)-colored mixed graph on vertices 0..vertex_count-1."""

    __slots__ = ("m", "n", "vertex_count", "_adj")

    def __init__(
        self,
        m: int,
        n: int,
        vertex_count: int,
        arcs: Iterable[tuple[int, int, int]] = (),
        edges: Iterable[tuple[int, int, int]] = (),
    ) -> None:
        _check_mn(m, n)
        if vertex_count < 0:
            raise InputError(f"vertex_count must be non-negative, got {vertex_count}")
        self.m = m
        self.n = n
        self.vertex_count = vertex_count
        # _adj[u][v] = sigma(u, v); both directions kept so type queries
        # never have to juggle signs.
        self._adj: list[dict[int, int]] = [{} for _ in range(vertex_count)]
        for u, v, label in arcs:
            self._check_pair(u, v)
            if not 1 <= label <= m:
                raise InputError(f"arc label {label} outside 1..{m}")
            self._insert(u, v, label, -label)
        for u, v, label in edges:
            self._check_pair(u, v)
            if not m + 1 <= label <= m + n:
                raise InputError(f"edge label {label} outside {m + 1}..{m + n}")
            self._insert(u, v, label, label)

    def _check_pair(self, u: int, v: int) -> None:
        for x in (u, v):
            if not 0 <= x < self.vertex_count:
                raise InputError(f"vertex {x} outside 0..{self.vertex_count - 1}")
        if u == v:
            raise InputError(f"loop at vertex {u} not allowed")

    def _insert(self, u: int, v: int, fwd: int, back: int) -> None:
        if v in self._adj[u]:
            raise InputError(f"duplicate adjacency between {u} and {v}")
        self._adj[u][v] = fwd
        self._adj[v][u] = back

    # -- queries ---------------------------------------------------------

    def sigma(self, u: int, v: int) -> int | None:
        """Signed label of the u,v adjacency as read from u, or None."""
        return self._adj[u].get(v)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbor_labels(self, u: int) -> dict[int, int]:
        """Mapping neighbor -> sigma(u, neighbor).  Do not mutate."""
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def neighbors_of_type(self, u: int, label: int) -> set[int]:
        """All vertices v with sigma(u, v) = label."""
        if not 0 <= u < self.vertex_count:
            raise InputError(f"vertex {u} outside 0..{self.vertex_count - 1}")
        if label == 0 or abs(label) > self.m + self.n or (label < 0 and -label > self.m):
            raise InputError(f"label {label} not valid for (m,n)=({self.m},{self.n})")
        return {v for v, s in self._adj[u].items() if s == label}

    def arc_records(self) -> list[tuple[int, int, int]]:
        """Arcs as (tail, head, label), sorted by underlying pair."""
        out = []
        for u in range(self.vertex_count):
            for v, s in self._adj[u].items():
                if u < v and 1 <= abs(s) <= self.m:
                    out.append((u, v, s) if s > 0 else (v, u, -s))
        out.sort(key=lambda r: (min(r[0], r[1]), max(r[0], r[1])))
        return out

    def edge_records(self) -> list[tuple[int, int, int]]:
        """Edges as (u, v, label) with u < v, sorted."""
        out = []
        for u in range(self.vertex_count):
            for v, s in self._adj[u].items():
                if u < v and s > self.m:
                    out.append((u, v, s))
        out.sort()
        return out

    def underlying(self) -> "UnderlyingGraph":
        pairs = []
        for u in range(self.vertex_count):
            for v in self._adj[u]:
                if u < v:
                    pairs.append((u, v))
        return UnderlyingGraph(self.vertex_count, pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (
            self.m == other.m
            and self.n == other.n
            and self.vertex_count == other.vertex_count
            and self._adj == other._adj
        )

    def __repr__(self) -> str:
        return (
            f"MixedGraph(m={self.m}, n={self.n}, vertices={self.vertex_count}, "
            f"arcs={len(self.arc_records())}, edges={len(self.edge_records())})"
        )


class UnderlyingGraph:
    """Plain simple undirected graph on vertices 0..vertex_count-1."""

    __slots__ = ("vertex_count", "_adj", "_edges")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if vertex_count < 0:
            raise InputError(f"vertex_count must be non-negative, got {vertex_count}")
        self.vertex_count = vertex_count
        self._adj: list[set[int]] = [set() for _ in range(vertex_count)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < vertex_count:
                    raise InputError(f"vertex {x} outside 0..{vertex_count - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u} not allowed")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise InputError(f"duplicate edge between {u} and {v}")
            seen.add(pair)
            self._adj[u].add(v)
            self._adj[v].add(u)
        self._edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def neighbors(self, u: int) -> set[int]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnderlyingGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._edges == other._edges

    def __repr__(self) -> str:
        return f"UnderlyingGraph(vertices={self.vertex_count}, edges={len(self._edges)})"


@dataclass(frozen=True)
class Labeling:
    """Assignment of one of the 2m+n adjacency types to each underlying edge.

    types maps each edge (u, v) with u < v to a type index 0..2m+n-1 in
    canonical order, read from the lower endpoint (forward arcs point
    low id -> high id).
    """

    m: int
    n: int
    types: dict[tuple[int, int], int]

    def apply(self, graph: UnderlyingGraph) -> MixedGraph:
        if set(self.types) != set(graph.edges):
            raise InputError("labeling does not cover exactly the edge set")
        symbols = canonical_types(self.m, self.n)
        arcs, edges = [], []
        for (u, v), t in self.types.items():
            kind, a, b, label = record_for(u, v, symbols[t], self.m)
            (arcs if kind == "arc" else edges).append((a, b, label))
        return MixedGraph(self.m, self.n, graph.vertex_count, arcs, edges)

    def as_tuple(self, edge_order: Iterable[tuple[int, int]]) -> tuple[int, ...]:
        return tuple(self.types[e] for e in edge_order)


# -- text format -----------------------------------------------------------
#
#   mngraph v1
#   m <m> n <n>
#   vertices <N>
#   arc <u> <v> <label>     (arc u->v, 1 <= label <= m)
#   edge <u> <v> <label>    (m+1 <= label <= m+n)
#
# UTF-8, LF line endings, '#' starts a comment, fields whitespace-separated.
# A plain undirected graph is the special case m=0, n=1 with every record
# "edge u v 1".


def _meaningful_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse(text: str) -> MixedGraph:
    """Parse the v1 text format into a MixedGraph."""
    lines = _meaningful_lines(text)

    def next_line(what: str) -> tuple[int, list[str]]:
        try:
            return next(lines)
        except StopIteration:
            raise ParseError(f"unexpected end of input, expected {what}") from None

    lineno, fields = next_line("header 'mngraph v1'")
    if fields != ["mngraph", "v1"]:
        raise ParseError(f"line {lineno}: expected header 'mngraph v1'")
    lineno, fields = next_line("'m <m> n <n>'")
    if len(fields) != 4 or fields[0] != "m" or fields[2] != "n":
        raise ParseError(f"line {lineno}: expected 'm <m> n <n>'")
    try:
        m, n = int(fields[1]), int(fields[3])
    except ValueError:
        raise ParseError(f"line {lineno}: m and n must be integers") from None
    if m < 0 or n < 0:
        raise ParseError(f"line {lineno}: m and n must be non-negative")
    lineno, fields = next_line("'vertices <N>'")
    if len(fields) != 2 or fields[0] != "vertices":
        raise ParseError(f"line {lineno}: expected 'vertices <N>'")
    try:
        count = int(fields[1])
    except ValueError:
        raise ParseError(f"line {lineno}: vertex count must be an integer") from None
    if count < 0:
        raise ParseError(f"line {lineno}: vertex count must be non-negative")

    arcs, edges = [], []
    for lineno, fields in lines:
        if len(fields) != 4 or fields[0] not in ("arc", "edge"):
            raise ParseError(f"line {lineno}: expected 'arc u v label' or 'edge u v label'")
        try:
            u, v, label = int(fields[1]), int(fields[2]), int(fields[3])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids and label must be integers") from None
        if fields[0] == "arc":
            if not 1 <= label <= m:
                raise ParseError(f"line {lineno}: arc label {label} outside 1..{m}")
            arcs.append((u, v, label))
        else:
            if not m + 1 <= label <= m + n:
                raise ParseError(f"line {lineno}: edge label {label} outside {m + 1}..{m + n}")
            edges.append((u, v, label))
    try:
        return MixedGraph(m, n, count, arcs, edges)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def serialize(graph: MixedGraph) -> str:
    """Serialize to the v1 text format; inverse of parse."""
    records: list[tuple[int, int, str]] = []
    for u, v, label in graph.arc_records():
        records.append((min(u, v), max(u, v), f"arc {u} {v} {label}"))
    for u, v, label in graph.edge_records():
        records.append((u, v, f"edge {u} {v} {label}"))
    records.sort()
    body = "".join(line + "\n" for _, _, line in records)
    return (
        "mngraph v1\n"
        f"m {graph.m} n {graph.n}\n"
        f"vertices {graph.vertex_count}\n" + body
    )


def serialize_underlying(graph: UnderlyingGraph) -> str:
    """Emit a plain graph as the m=0, n=1 special case of the format."""
    body = "".join(f"edge {u} {v} 1\n" for u, v in graph.edges)
    return "mngraph v1\nm 0 n 1\n" + f"vertices {graph.vertex_count}\n" + body
