"""Exact solvers: relative/absolute clique numbers, chromatic number, and
exhaustive labeling search over an underlying graph.

The relative clique number is the maximum clique of the seeing graph,
solved by branch and bound with a greedy-coloring upper bound.  The
absolute clique number needs the stronger internal condition (midpoints of
special 2-paths must lie inside the chosen set), which is not hereditary,
so its search filters candidate sets to a fixpoint at every node.  The
chromatic number is the minimum block count over valid quotients.

labeling_search enumerates the (2m+n)^|E| labelings of an underlying
graph.  It prunes with an optimistic bound (pairs that can still see are
assumed to see) and cancels symmetric branches by first-occurrence
canonicalization of the label-permutation group: arc labels are
interchangeable up to orientation flips, edge labels are interchangeable.
Work is split into shards keyed by the first two edge assignments; every
shard runs an independent search seeded with one deterministic probe
result, so the outcome is bitwise identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import (
    CapacityError,
    InputError,
    Labeling,
    MixedGraph,
    UnderlyingGraph,
    canonical_types,
    flip,
    record_for,
)
from .seeing import DEFAULT_PARTITION_LIMIT, QuotientState, seeing_graph

DEFAULT_EDGE_LIMIT = 16
OBJECTIVES = ("relative", "absolute")


@dataclass(frozen=True)
class CliqueResult:
    value: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class SearchOutcome:
    best_value: int
    best_labeling: Labeling
    explored: int


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        mask ^= bit
        out.append(bit.bit_length() - 1)
    return out


def _greedy_color_count(cand: int, masks: tuple[int, ...] | list[int]) -> int:
    """Number of greedy color classes of the induced subgraph; >= clique."""
    classes: list[int] = []
    rest = cand
    while rest:
        bit = rest & -rest
        rest ^= bit
        row = masks[bit.bit_length() - 1]
        for i, cmask in enumerate(classes):
            if not cmask & row:
                classes[i] |= bit
                break
        else:
            classes.append(bit)
    return len(classes)


def _max_clique(n: int, masks: tuple[int, ...] | list[int]) -> tuple[int, int]:
    """Exact maximum clique of a bitmask graph: (size, witness mask).

    Tomita-style: candidates are greedily colored in id order and expanded
    in decreasing color, pruning when |R| + color cannot beat the best.
    """
    best = 0
    best_mask = 0

    def expand(rmask: int, rsize: int, cand: int) -> None:
        nonlocal best, best_mask
        if not cand:
            if rsize > best:
                best, best_mask = rsize, rmask
            return
        order: list[tuple[int, int]] = []
        classes: list[int] = []
        rest = cand
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            row = masks[v]
            for i, cmask in enumerate(classes):
                if not cmask & row:
                    classes[i] |= bit
                    order.append((v, i + 1))
                    break
            else:
                classes.append(bit)
                order.append((v, len(classes)))
        order.sort(key=lambda vc: vc[1])  # expand in decreasing color order
        for v, color in reversed(order):
            if rsize + color <= best:
                return
            bit = 1 << v
            expand(rmask | bit, rsize + 1, cand & masks[v])
            cand ^= bit

    if n:
        expand(0, 0, (1 << n) - 1)
    return best, best_mask


def _has_clique(masks: tuple[int, ...] | list[int], cand: int, need: int) -> bool:
    """Decision variant: does the induced subgraph contain a clique >= need."""
    if need <= 0:
        return True

    def expand(rsize: int, cand: int) -> bool:
        if rsize + bin(cand).count("1") < need:
            return False
        if rsize >= need:
            return True
        if rsize + _greedy_color_count(cand, masks) < need:
            return False
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            if expand(rsize + 1, cand & masks[v]):
                return True
            cand ^= bit
            if rsize + bin(cand).count("1") < need:
                return False
        return False

    return expand(0, cand)


def _lex_least_clique(n: int, masks: tuple[int, ...], size: int) -> tuple[int, ...]:
    """Lexicographically least clique of the given (attainable) size."""
    chosen: list[int] = []
    cand = (1 << n) - 1
    v = 0
    while len(chosen) < size:
        bit = 1 << v
        if cand & bit:
            rest = cand & masks[v] & ~((bit << 1) - 1)
            if _has_clique(masks, rest, size - len(chosen) - 1):
                chosen.append(v)
                cand = rest
        v += 1
    return tuple(chosen)


def relative_clique_number(graph: MixedGraph) -> CliqueResult:
    """Largest pairwise-seeing vertex set: the max clique of the seeing graph."""
    n = graph.vertex_count
    if n == 0:
        return CliqueResult(0, ())
    sg = seeing_graph(graph)
    size, _ = _max_clique(n, sg.masks)
    return CliqueResult(size, _lex_least_clique(n, sg.masks, size))


def _adjacency_masks(graph: MixedGraph) -> list[int]:
    masks = [0] * graph.vertex_count
    for u in range(graph.vertex_count):
        for v in graph.neighbor_labels(u):
            masks[u] |= 1 << v
    return masks


def _midpoint_masks(graph: MixedGraph) -> list[list[int]]:
    """mid[u][v] = bitmask of w such that u-w-v is a special 2-path."""
    n = graph.vertex_count
    mid = [[0] * n for _ in range(n)]
    for w in range(n):
        items = list(graph.neighbor_labels(w).items())
        bit = 1 << w
        for i, (x, sx) in enumerate(items):
            for y, sy in items[i + 1 :]:
                if sx != sy:
                    mid[x][y] |= bit
                    mid[y][x] |= bit
    return mid


def is_absolute_clique(graph: MixedGraph) -> bool:
    """True iff every pair of distinct vertices sees each other in G."""
    n = graph.vertex_count
    adj = _adjacency_masks(graph)
    mid = _midpoint_masks(graph)
    for u in range(n):
        for v in range(u + 1, n):
            if not (adj[u] >> v & 1) and not mid[u][v]:
                return False
    return True


def absolute_clique_number(graph: MixedGraph) -> CliqueResult:
    """Largest S with G[S] pairwise-seeing using midpoints inside S only.

    Branch and bound over vertex subsets.  Removing a vertex can only
    remove seeing pairs, so each node filters the undecided set to a
    fixpoint: chosen pairs must still have a live midpoint among the
    surviving vertices, and every candidate must see every chosen vertex.
    """
    n = graph.vertex_count
    if n == 0:
        return CliqueResult(0, ())
    adj = _adjacency_masks(graph)
    mid = _midpoint_masks(graph)
    see = [adj[u] | sum(1 << v for v in range(n) if mid[u][v]) for u in range(n)]
    cap, _ = _max_clique(n, see)
    best = 0
    best_mask = 0

    def refilter(c_mask: int, d_mask: int) -> int | None:
        while True:
            s_mask = c_mask | d_mask
            chosen = _bits(c_mask)
            for i, u in enumerate(chosen):
                for v in chosen[i + 1 :]:
                    if not (adj[u] >> v & 1) and not (mid[u][v] & s_mask):
                        return None
            removed = 0
            rest = d_mask
            while rest:
                bit = rest & -rest
                rest ^= bit
                x = bit.bit_length() - 1
                for u in chosen:
                    if not (adj[x] >> u & 1) and not (mid[x][u] & s_mask):
                        removed |= bit
                        break
            if not removed:
                return d_mask
            d_mask &= ~removed

    def expand(c_mask: int, csize: int, d_mask: int) -> None:
        nonlocal best, best_mask
        if best >= cap:
            return
        if not d_mask:
            if csize > best:
                best, best_mask = csize, c_mask
            return
        if csize + bin(d_mask).count("1") <= best:
            return
        if csize + _greedy_color_count(d_mask, see) <= best:
            return
        bit = d_mask & -d_mask
        v = bit.bit_length() - 1
        inc = refilter(c_mask | bit, (d_mask ^ bit) & see[v])
        if inc is not None:
            expand(c_mask | bit, csize + 1, inc)
        exc = refilter(c_mask, d_mask ^ bit)
        if exc is not None:
            expand(c_mask, csize, exc)

    expand(0, 0, (1 << n) - 1)
    return CliqueResult(best, tuple(_bits(best_mask)))


def chromatic_number(
    graph: MixedGraph, max_vertices: int = DEFAULT_PARTITION_LIMIT
) -> tuple[int, list[list[int]]]:
    """Minimum order of a homomorphic image, with a minimizing quotient.

    Branch and bound over valid quotient partitions (the same validity
    rule as the merge oracle): vertices are placed one by one into an
    existing block or a fresh one, pruning once the block count cannot
    beat the incumbent.
    """
    n = graph.vertex_count
    if n > max_vertices:
        raise CapacityError(
            f"partition search over {n} vertices exceeds the limit of {max_vertices}"
        )
    if n == 0:
        return 0, []
    best = n
    best_blocks = [[v] for v in range(n)]
    state = QuotientState(graph)

    def extend(pos: int) -> None:
        nonlocal best, best_blocks
        used = state.block_count()
        if used >= best:
            return
        if pos == n:
            best = used
            best_blocks = [list(block) for block in state.members]
            return
        for b in range(used):
            journal = state.try_place(pos, b)
            if journal is not None:
                extend(pos + 1)
                state.unplace(pos, b, journal)
        if used + 1 < best:
            state.open_block()
            journal = state.try_place(pos, used)
            if journal is not None:
                extend(pos + 1)
                state.unplace(pos, used, journal)
            state.close_block()

    extend(0)
    return best, best_blocks


# -- labeling search --------------------------------------------------------


class _LabelingContext:
    """Static data shared by every node of one labeling search."""

    def __init__(self, graph: UnderlyingGraph, m: int, n: int, objective: str):
        self.m = m
        self.n = n
        self.objective = objective
        self.vertex_count = graph.vertex_count
        self.edges: list[tuple[int, int]] = sorted(graph.edges)
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        self.type_count = 2 * m + n
        self.symbols = canonical_types(m, n)
        # signed label read from each endpoint, per type index
        self.sig_low = self.symbols
        self.sig_high = [flip(s, m) for s in self.symbols]

        nonadj: list[tuple[int, int]] = []
        pair_id: dict[tuple[int, int], int] = {}
        for u in range(graph.vertex_count):
            for v in range(u + 1, graph.vertex_count):
                if not graph.adjacent(u, v):
                    pair_id[(u, v)] = len(nonadj)
                    nonadj.append((u, v))
        self.pairs = nonadj
        self.pair_total = [0] * len(nonadj)
        # resolutions[e] = (pair, other edge, sign slot of w on e, on other)
        self.resolutions: list[list[tuple[int, int, bool, bool]]] = [
            [] for _ in self.edges
        ]
        for (x, y), pid in pair_id.items():
            for w in graph.neighbors(x) & graph.neighbors(y):
                self.pair_total[pid] += 1
                e1 = self.edge_index[(min(w, x), max(w, x))]
                e2 = self.edge_index[(min(w, y), max(w, y))]
                w_low_1 = w < x
                w_low_2 = w < y
                self.resolutions[e1].append((pid, e2, w_low_1, w_low_2))
                self.resolutions[e2].append((pid, e1, w_low_2, w_low_1))

    def allowed_types(self, used_arc: int, used_edge: int) -> list[tuple[int, int, int]]:
        """Canonical (type, used_arc', used_edge') choices at one edge."""
        out = []
        m = self.m
        for t in range(self.type_count):
            if t < m:
                label = t + 1
                if label <= used_arc + 1:
                    out.append((t, max(used_arc, label), used_edge))
            elif t < 2 * m:
                label = t - m + 1
                if label <= used_arc:
                    out.append((t, used_arc, used_edge))
            else:
                label = t - 2 * m + 1
                if label <= used_edge + 1:
                    out.append((t, used_arc, max(used_edge, label)))
        return out

    def materialize(self, assignment: list[int]) -> MixedGraph:
        arcs, edges = [], []
        for (u, v), t in zip(self.edges, assignment):
            kind, a, b, label = record_for(u, v, self.symbols[t], self.m)
            (arcs if kind == "arc" else edges).append((a, b, label))
        return MixedGraph(self.m, self.n, self.vertex_count, arcs, edges)

    def evaluate(self, assignment: list[int]) -> int:
        graph = self.materialize(assignment)
        if self.objective == "relative":
            return _max_clique(self.vertex_count, seeing_graph(graph).masks)[0]
        return absolute_clique_number(graph).value


class _SearchState:
    """Mutable per-branch state: assignments and pair liveness."""

    def __init__(self, ctx: _LabelingContext):
        self.ctx = ctx
        self.assignment = [-1] * len(ctx.edges)
        # a pair starts fully "open"; dead_count counts decided-dead
        # midpoints, alive_count decided-alive ones
        self.dead_count = [0] * len(ctx.pairs)
        self.alive_count = [0] * len(ctx.pairs)
        self.n_dead = sum(1 for t in ctx.pair_total if t == 0)

    def is_dead(self, pid: int) -> bool:
        return self.dead_count[pid] == self.ctx.pair_total[pid] and not self.alive_count[pid]

    def assign(self, e: int, t: int) -> list[tuple[int, int]]:
        """Set edge e to type t; returns a journal of (pid, +-1) updates."""
        ctx = self.ctx
        self.assignment[e] = t
        journal: list[tuple[int, int]] = []
        for pid, e2, w_low_here, w_low_other in ctx.resolutions[e]:
            t2 = self.assignment[e2]
            if t2 < 0:
                continue
            s1 = ctx.sig_low[t] if w_low_here else ctx.sig_high[t]
            s2 = ctx.sig_low[t2] if w_low_other else ctx.sig_high[t2]
            if s1 == s2:
                self.dead_count[pid] += 1
                journal.append((pid, 1))
                if self.is_dead(pid):
                    self.n_dead += 1
            else:
                self.alive_count[pid] += 1
                journal.append((pid, -1))
        return journal

    def unassign(self, e: int, journal: list[tuple[int, int]]) -> None:
        self.assignment[e] = -1
        for pid, kind in reversed(journal):
            if kind == 1:
                if self.is_dead(pid):
                    self.n_dead -= 1
                self.dead_count[pid] -= 1
            else:
                self.alive_count[pid] -= 1

    def value_bound(self) -> int:
        """Optimistic objective bound: disjoint dead pairs each cost a vertex."""
        ctx = self.ctx
        if not self.n_dead:
            return ctx.vertex_count
        used = 0
        matched = 0
        for pid, (u, v) in enumerate(ctx.pairs):
            if self.is_dead(pid):
                bits = (1 << u) | (1 << v)
                if not used & bits:
                    used |= bits
                    matched += 1
        return ctx.vertex_count - matched


def _probe(ctx: _LabelingContext, node_cap: int = 200_000) -> tuple[int, tuple[int, ...], int]:
    """Deterministic incumbent: first complete labeling with no dead pair,
    or the lexicographically first canonical labeling if none exists.

    Returns (value, labeling tuple, leaves evaluated)."""
    state = _SearchState(ctx)
    k = len(ctx.edges)
    nodes = 0

    def dfs(idx: int, used_arc: int, used_edge: int) -> tuple[int, ...] | None:
        nonlocal nodes
        if state.n_dead:
            return None
        if idx == k:
            return tuple(state.assignment)
        if nodes >= node_cap:
            return None
        for t, ua, ue in ctx.allowed_types(used_arc, used_edge):
            nodes += 1
            journal = state.assign(idx, t)
            found = dfs(idx + 1, ua, ue)
            if found is not None:
                return found
            state.unassign(idx, journal)
        return None

    found = dfs(0, 0, 0) if not state.n_dead else None
    if found is None:
        # fall back to the lex-first canonical labeling
        assignment = []
        used_arc = used_edge = 0
        for _ in range(k):
            t, used_arc, used_edge = ctx.allowed_types(used_arc, used_edge)[0]
            assignment.append(t)
        found = tuple(assignment)
    return ctx.evaluate(list(found)), found, 1


def _enumerate_shards(ctx: _LabelingContext, depth: int) -> list[tuple[tuple[int, ...], int, int]]:
    """All canonical assignments of the first `depth` edges."""
    shards: list[tuple[tuple[int, ...], int, int]] = []

    def walk(prefix: list[int], used_arc: int, used_edge: int) -> None:
        if len(prefix) == depth:
            shards.append((tuple(prefix), used_arc, used_edge))
            return
        for t, ua, ue in ctx.allowed_types(used_arc, used_edge):
            prefix.append(t)
            walk(prefix, ua, ue)
            prefix.pop()

    walk([], 0, 0)
    return shards


def _run_shard(
    ctx: _LabelingContext,
    prefix: tuple[int, ...],
    used_arc: int,
    used_edge: int,
    floor: int,
) -> tuple[int, tuple[int, ...] | None, int]:
    """Search one shard; reports only strict improvements over floor."""
    state = _SearchState(ctx)
    for e, t in enumerate(prefix):
        state.assign(e, t)
    k = len(ctx.edges)
    best = floor
    best_labeling: tuple[int, ...] | None = None
    explored = 0

    def dfs(idx: int, used_arc: int, used_edge: int) -> None:
        nonlocal best, best_labeling, explored
        if state.value_bound() <= best:
            return
        if idx == k:
            explored += 1
            value = ctx.evaluate(state.assignment)
            if value > best:
                best = value
                best_labeling = tuple(state.assignment)
            return
        for t, ua, ue in ctx.allowed_types(used_arc, used_edge):
            journal = state.assign(idx, t)
            dfs(idx + 1, ua, ue)
            state.unassign(idx, journal)

    dfs(len(prefix), used_arc, used_edge)
    return best, best_labeling, explored


def _shard_worker(args) -> tuple[int, tuple[int, ...] | None, int]:
    graph_data, m, n, objective, prefix, used_arc, used_edge, floor = args
    vertex_count, edges = graph_data
    ctx = _LabelingContext(UnderlyingGraph(vertex_count, edges), m, n, objective)
    return _run_shard(ctx, prefix, used_arc, used_edge, floor)


def labeling_search(
    graph: UnderlyingGraph,
    m: int,
    n: int,
    objective: str,
    max_edges: int = DEFAULT_EDGE_LIMIT,
    threads: int = 1,
) -> SearchOutcome:
    """Exact maximum of the objective over all (2m+n)^|E| labelings.

    The result is deterministic for any thread count: shards are fixed by
    the first two edge assignments, each prunes against the same probe
    incumbent, and results reduce by (value, lexicographically least
    labeling).
    """
    if objective not in OBJECTIVES:
        raise InputError(f"objective must be one of {OBJECTIVES}, got {objective!r}")
    if m < 0 or n < 0:
        raise InputError(f"m and n must be non-negative, got ({m}, {n})")
    edge_count = graph.edge_count
    if edge_count > max_edges:
        raise CapacityError(
            f"labeling search over {edge_count} edges exceeds the limit of {max_edges}"
        )
    if edge_count and 2 * m + n == 0:
        raise InputError("no adjacency types available: (m, n) = (0, 0) with edges")

    ctx = _LabelingContext(graph, m, n, objective)
    if edge_count == 0:
        empty = Labeling(m, n, {})
        return SearchOutcome(ctx.evaluate([]), empty, 1)

    probe_value, probe_labeling, probe_explored = _probe(ctx)
    depth = min(2, edge_count)
    shards = _enumerate_shards(ctx, depth)
    args = [
        ((ctx.vertex_count, ctx.edges), m, n, objective, prefix, ua, ue, probe_value)
        for prefix, ua, ue in shards
    ]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_shard_worker, args))
    else:
        results = [_run_shard(ctx, prefix, ua, ue, probe_value) for prefix, ua, ue in shards]

    best_value = probe_value
    best_labeling = probe_labeling
    explored = probe_explored
    for value, labeling, count in results:
        explored += count
        if labeling is None:
            continue
        if value > best_value or (value == best_value and labeling < best_labeling):
            best_value, best_labeling = value, labeling
    types = {e: t for e, t in zip(ctx.edges, best_labeling)}
    return SearchOutcome(best_value, Labeling(m, n, types), explored)
