"""Command-line entry point: ``halinrep <command> ...``.

Exit codes: 0 on success (verified, SAT), 1 when a check fails (verifier
mismatch, UNSAT, search budget exhausted), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from .epg import c_epg_representation, s_epg_representation
from .errors import HalinRepError
from .generate import gen_halin, gen_tuc
from .geometry import Representation, verify_representation
from .graph import Graph, decompose_tuc, is_halin
from .io import format_graph, format_representation, parse_representation, read_graph
from .search import ABORTED, DEFAULT_BUDGET, SAT, b0vpg_search
from .svg import emit_svg
from .vpg import lvpg_representation

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    """Anything wrong with what the user handed us."""


def _load(path: str) -> Graph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except HalinRepError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    d = decompose_tuc(g)
    print(f"vertices {g.n}")
    print(f"edges {g.edge_count}")
    print(f"cycle_length {d.k}")
    print(f"internal {len(d.internal)}")
    print(f"halin {'yes' if is_halin(d) else 'no'}")
    print("cycle " + " ".join(g.name(v) for v in d.cycle))
    return OK


def _construct(build: Callable[[Graph, argparse.Namespace], Representation]) -> Callable[[argparse.Namespace], int]:
    def run(args: argparse.Namespace) -> int:
        g = _load(args.graph)
        rep = build(g, args)
        report = verify_representation(g, rep)
        _emit(format_representation(rep), args.out)
        if args.svg:
            emit_svg(rep, args.svg, g.labels)
        if not report.passed:
            for line in report.lines():
                if line.endswith("MISMATCH"):
                    print(line, file=sys.stderr)
            print("verification FAILED", file=sys.stderr)
            return FAILED
        return OK

    return run


cmd_vpg = _construct(lambda g, a: lvpg_representation(decompose_tuc(g)))
cmd_epg_c = _construct(lambda g, a: c_epg_representation(decompose_tuc(g)))
cmd_epg_s = _construct(lambda g, a: s_epg_representation(decompose_tuc(g), verbatim=a.verbatim))


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    try:
        rep = parse_representation(Path(args.document).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.document}: {exc.strerror}") from None
    report = verify_representation(g, rep)
    for line in report.lines():
        if args.all_pairs or line.endswith("MISMATCH"):
            print(line)
    extra = len(report.bend_violations) + len(report.type_violations)
    print(
        f"pairs {report.pair_count} intersecting {report.intersecting} "
        f"mismatches {len(report.mismatches)} shape_violations {extra}"
    )
    print("OK" if report.passed else "FAILED")
    return OK if report.passed else FAILED


def cmd_search_b0(args: argparse.Namespace) -> int:
    g = _load(args.graph)

    def progress(nodes: int, depth: int) -> None:
        print(f"nodes {nodes}", file=sys.stderr)

    outcome = b0vpg_search(g, args.grid, args.budget, progress=progress if args.verbose else None)
    print(outcome.status)
    print(f"nodes {outcome.nodes_explored}")
    if outcome.status == SAT:
        sys.stdout.write(format_representation(outcome.representation()))
        return OK
    if outcome.status == ABORTED:
        print("budget exhausted before the search finished", file=sys.stderr)
    return FAILED


def cmd_gen(args: argparse.Namespace) -> int:
    if args.internal < 1:
        raise InputError("--internal must be at least 1")
    if args.degree_two:
        g = gen_tuc(args.seed, args.internal, args.degree_two)
    else:
        g = gen_halin(args.seed, args.internal)
    _emit(format_graph(g), args.out)
    return OK


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="halinrep", description="Grid path representations of Halin graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="decompose into tree and cycle, report Halin status")
    s.add_argument("graph")
    s.set_defaults(func=cmd_validate)

    for name, func, helptext in (
        ("vpg", cmd_vpg, "build and verify the L-shaped 1-bend VPG layout"),
        ("epg-c", cmd_epg_c, "build and verify the C-shaped 2-bend EPG layout"),
        ("epg-s", cmd_epg_s, "build and verify the S-shaped 2-bend EPG layout"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("graph")
        s.add_argument("--svg", metavar="PATH", help="also write an SVG drawing")
        s.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
        if name == "epg-s":
            s.add_argument(
                "--verbatim", action="store_true", help="skip the leg respacing on the last leaf's path"
            )
        s.set_defaults(func=func)

    s = sub.add_parser("verify", help="check a representation document against a graph")
    s.add_argument("graph")
    s.add_argument("document")
    s.add_argument("--all-pairs", action="store_true", help="print every pair, not just mismatches")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search-b0", help="exhaustive search for a 0-bend VPG layout")
    s.add_argument("graph")
    s.add_argument("--grid", type=int, default=None, help="coordinate values per axis (default 2n)")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget")
    s.add_argument("-v", "--verbose", action="store_true", help="report progress on stderr")
    s.set_defaults(func=cmd_search_b0)

    s = sub.add_parser("gen", help="print a random Halin (or tree-union-cycle) graph")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--internal", type=int, required=True, help="number of internal tree vertices")
    s.add_argument("--degree-two", type=int, default=0, help="subdivide this many tree edges")
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except (InputError, HalinRepError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
