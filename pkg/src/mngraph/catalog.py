"""Isomorph-free catalog of small connected graphs.

Graphs are generated by vertex augmentation: every connected graph on n
vertices arises from a connected (n-1)-vertex graph by attaching a new
vertex with a non-empty neighborhood (delete any non-cutvertex to see
this).  Duplicates are rejected by bucketing on a refinement invariant and
running an exact isomorphism test inside each bucket, so the catalog is
exact, not heuristic.

Generation up to 8 vertices takes seconds; level 9 (261080 graphs) takes
minutes, which is why the test suite ships the level-9 catalog as a fixture
file.  Regenerate it with ``python -m mngraph.catalog 9 out.txt.gz``.

The file format is one graph per line, ``<n> <hex>`` where <hex> encodes
the upper-triangle adjacency bits, bit position j*(j-1)/2 + i for the pair
i < j.
"""

from __future__ import annotations

import gzip
import sys
from typing import Iterable, Iterator

from .core import UnderlyingGraph

# number of connected graphs on n vertices up to isomorphism (OEIS A001349);
# used by tests to validate generated catalogs
KNOWN_CONNECTED_COUNTS = {
    1: 1,
    2: 1,
    3: 2,
    4: 6,
    5: 21,
    6: 112,
    7: 853,
    8: 11117,
    9: 261080,
}

Masks = tuple[int, ...]


def _neighbors(mask: int) -> Iterator[int]:
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit.bit_length() - 1


def _refinement_colors(n: int, masks: Masks) -> list[tuple]:
    """Two rounds of neighborhood refinement starting from degrees."""
    degs = [bin(masks[v]).count("1") for v in range(n)]
    round1 = [
        (degs[v], tuple(sorted(degs[w] for w in _neighbors(masks[v])))) for v in range(n)
    ]
    return [
        (round1[v], tuple(sorted(round1[w] for w in _neighbors(masks[v]))))
        for v in range(n)
    ]


def _invariant_key(n: int, masks: Masks, colors: list[tuple]) -> int:
    edge_count = sum(bin(row).count("1") for row in masks) // 2
    return hash((n, edge_count, tuple(sorted(colors))))


def _isomorphic(n: int, ma: Masks, mb: Masks, ca: list[tuple], cb: list[tuple]) -> bool:
    """Exact isomorphism test by backtracking over color-compatible maps."""
    freq: dict[tuple, int] = {}
    for c in ca:
        freq[c] = freq.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[ca[v]], ca[v], v))
    candidates = [[w for w in range(n) if cb[w] == ca[v]] for v in order]
    image = [-1] * n
    mapped_a = 0
    used_b = 0

    def extend(i: int) -> bool:
        nonlocal mapped_a, used_b
        if i == n:
            return True
        v = order[i]
        want = 0
        row = ma[v] & mapped_a
        for u in _neighbors(row):
            want |= 1 << image[u]
        for w in candidates[i]:
            if used_b >> w & 1:
                continue
            if mb[w] & used_b != want:
                continue
            image[v] = w
            mapped_a |= 1 << v
            used_b |= 1 << w
            if extend(i + 1):
                return True
            mapped_a &= ~(1 << v)
            used_b &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)


def connected_graphs(max_n: int) -> dict[int, list[Masks]]:
    """All connected graphs on 1..max_n vertices up to isomorphism.

    Returns adjacency-bitmask tuples, in a deterministic generation order.
    """
    catalog: dict[int, list[Masks]] = {1: [(0,)]}
    for n in range(2, max_n + 1):
        accepted: list[Masks] = []
        colors_of: list[list[tuple]] = []
        buckets: dict[int, list[int]] = {}
        top_bit = 1 << (n - 1)
        for parent in catalog[n - 1]:
            for nbr in range(1, top_bit):
                child = tuple(
                    parent[i] | (top_bit if nbr >> i & 1 else 0) for i in range(n - 1)
                ) + (nbr,)
                colors = _refinement_colors(n, child)
                key = _invariant_key(n, child, colors)
                bucket = buckets.get(key)
                if bucket is None:
                    buckets[key] = [len(accepted)]
                elif any(
                    _isomorphic(n, child, accepted[idx], colors, colors_of[idx])
                    for idx in bucket
                ):
                    continue
                else:
                    bucket.append(len(accepted))
                accepted.append(child)
                colors_of.append(colors)
        catalog[n] = accepted
    return catalog


def masks_to_graph(masks: Masks) -> UnderlyingGraph:
    n = len(masks)
    edges = [(u, v) for u in range(n) for v in _neighbors(masks[u] >> (u + 1) << (u + 1))]
    return UnderlyingGraph(n, edges)


def masks_to_edges(masks: Masks) -> list[tuple[int, int]]:
    return [(u, v) for u in range(len(masks)) for v in _neighbors(masks[u]) if u < v]


def _encode(masks: Masks) -> str:
    code = 0
    pos = 0
    n = len(masks)
    for j in range(n):
        for i in range(j):
            if masks[i] >> j & 1:
                code |= 1 << pos
            pos += 1
    return f"{len(masks)} {code:x}"


def decode_line(line: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse '<n> <hex>' into (vertex count, edge list)."""
    n_str, hex_str = line.split()
    n = int(n_str)
    code = int(hex_str, 16)
    edges = []
    pos = 0
    for j in range(n):
        for i in range(j):
            if code >> pos & 1:
                edges.append((i, j))
            pos += 1
    return n, edges


def write_catalog(path: str, max_n: int) -> dict[int, int]:
    """Generate and write the catalog; returns the per-order counts."""
    catalog = connected_graphs(max_n)
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "wt", encoding="utf-8") as fh:
        for n in range(1, max_n + 1):
            for masks in catalog[n]:
                fh.write(_encode(masks) + "\n")
    return {n: len(catalog[n]) for n in catalog}


def iter_catalog_file(path: str) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rt", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield decode_line(line)


def _main(argv: Iterable[str]) -> int:
    args = list(argv)
    if len(args) != 2:
        print("usage: python -m mngraph.catalog <max_n> <out-file[.gz]>", file=sys.stderr)
        return 2
    counts = write_catalog(args[1], int(args[0]))
    for n, c in sorted(counts.items()):
        print(f"n={n}: {c} connected graphs")
    return 0


if __name__ == "__main__":
    sys.exit(_main(sys.argv[1:]))
