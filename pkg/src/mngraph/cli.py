"""Command-line front end: build, check, search, recognize, verify.

Graph files use the v1 text format; ``-`` means standard input or output.
Exit codes: 0 on success or PASS, 1 when a verification suite FAILs, 2 on
usage, input, or capacity errors.  Output is byte-stable for a fixed seed
and any ``--threads`` value.
"""

from __future__ import annotations

import argparse
import sys

from .constructions import BUILDERS, PARAMETRIC_BUILDERS
from .core import (
    CapacityError,
    InputError,
    MixedGraph,
    ParseError,
    parse,
    serialize,
    serialize_underlying,
)
from .recognizers import family_profile
from .seeing import DEFAULT_PARTITION_LIMIT, sees
from .solvers import (
    DEFAULT_EDGE_LIMIT,
    absolute_clique_number,
    chromatic_number,
    labeling_search,
    relative_clique_number,
)
from .verification import (
    SUITE_IDS,
    verify_bound_properties,
    verify_lemma1_equivalence,
    verify_theorem_suite,
)

VERIFY_SUITES = SUITE_IDS + ("lemma1", "bounds")


def _read_graph(path: str) -> MixedGraph:
    if path == "-":
        return parse(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse(fh.read())
    except FileNotFoundError:
        raise InputError(f"no such graph file: {path}") from None


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="mngraph", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="emit a named construction")
    p_build.add_argument("name", choices=sorted(BUILDERS))
    p_build.add_argument("--m", type=int, default=None)
    p_build.add_argument("--n", type=int, default=None)
    p_build.add_argument("-o", "--output", default="-")
    p_build.add_argument(
        "--underlying", action="store_true", help="emit only the underlying graph"
    )

    p_check = sub.add_parser("check", help="compute a clique/chromatic value")
    p_check.add_argument("file")
    mode = p_check.add_mutually_exclusive_group(required=True)
    mode.add_argument("--relative", action="store_true")
    mode.add_argument("--absolute", action="store_true")
    mode.add_argument("--chromatic", action="store_true")
    mode.add_argument("--sees", nargs=2, type=int, metavar=("U", "V"))
    p_check.add_argument(
        "--max-partition-vertices", type=int, default=DEFAULT_PARTITION_LIMIT
    )

    p_search = sub.add_parser("search", help="exhaustive labeling search")
    p_search.add_argument("file")
    p_search.add_argument("--m", type=int, required=True)
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--objective", choices=("relative", "absolute"), required=True)
    p_search.add_argument("--max-search-edges", type=int, default=DEFAULT_EDGE_LIMIT)
    p_search.add_argument("--threads", type=int, default=1)
    p_search.add_argument(
        "--emit-graph", default=None, help="write the best labeled graph to this file"
    )

    p_rec = sub.add_parser("recognize", help="print the family profile")
    p_rec.add_argument("file")

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=VERIFY_SUITES)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--threads", type=int, default=1)
    p_ver.add_argument(
        "--report-file", default=None, help="also write the tab-separated report here"
    )
    return top


def _cmd_build(args) -> int:
    if args.name in PARAMETRIC_BUILDERS:
        if args.m is None or args.n is None:
            raise InputError(f"build {args.name} needs --m and --n")
        graph = BUILDERS[args.name](args.m, args.n)
    else:
        graph = BUILDERS[args.name]()
    text = serialize_underlying(graph.underlying()) if args.underlying else serialize(graph)
    _write_text(args.output, text)
    return 0


def _cmd_check(args) -> int:
    graph = _read_graph(args.file)
    if args.sees is not None:
        u, v = args.sees
        print("true" if sees(graph, u, v) else "false")
        return 0
    if args.relative:
        result = relative_clique_number(graph)
        print(result.value)
        print("witness " + " ".join(map(str, result.witness)))
        return 0
    if args.absolute:
        result = absolute_clique_number(graph)
        print(result.value)
        print("witness " + " ".join(map(str, result.witness)))
        return 0
    value, blocks = chromatic_number(graph, max_vertices=args.max_partition_vertices)
    block_of = [0] * graph.vertex_count
    for i, block in enumerate(sorted(blocks, key=min)):
        for x in block:
            block_of[x] = i
    print(value)
    print("partition " + " ".join(map(str, block_of)))
    return 0


def _cmd_search(args) -> int:
    graph = _read_graph(args.file).underlying()
    outcome = labeling_search(
        graph,
        args.m,
        args.n,
        args.objective,
        max_edges=args.max_search_edges,
        threads=args.threads,
    )
    print(f"value {outcome.best_value}")
    print(f"explored {outcome.explored}")
    edge_order = sorted(graph.edges)
    print("labeling " + " ".join(map(str, outcome.best_labeling.as_tuple(edge_order))))
    if args.emit_graph is not None:
        _write_text(args.emit_graph, serialize(outcome.best_labeling.apply(graph)))
    return 0


def _cmd_recognize(args) -> int:
    graph = _read_graph(args.file).underlying()
    for line in family_profile(graph).lines():
        print(line)
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "lemma1":
        report = verify_lemma1_equivalence(seed=args.seed)
    elif args.suite == "bounds":
        report = verify_bound_properties(seed=args.seed)
    else:
        report = verify_theorem_suite(args.suite, seed=args.seed)
    sys.stdout.write(report.text())
    if args.report_file is not None:
        _write_text(args.report_file, report.tsv())
    return 0 if report.passed else 1


def run(argv: list[str] | None = None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "build": _cmd_build,
        "check": _cmd_check,
        "search": _cmd_search,
        "recognize": _cmd_recognize,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
