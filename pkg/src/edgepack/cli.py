"""Command-line entry point: ``edgepack {solve,classify,generate,verify,crosscheck}``.

Exit codes: 0 success, 1 graph not in a supported/requested class, 2 input or
parse error, 3 internal assertion failure, 4 crosscheck mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import __version__
from .crosscheck import CLASSES, run_crosscheck
from .dispatch import CLASS_CHOICES, NotInClass, solve
from .errors import InputError, InternalError
from .generators import gen_block, gen_proper_interval, gen_split, gen_tree
from .graph import is_eop_set
from .io import FORMATS, parse_edge_set, parse_graph, serialize_graph
from .oracle import SearchBudget
from .recognition import classify

EXIT_OK = 0
EXIT_NOT_IN_CLASS = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_MISMATCH = 4


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _read(path: str, stdin: TextIO) -> list[str]:
    if path == "-":
        return stdin.read().splitlines()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgepack", description="Edge open packing on chordal subclasses.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
        p.add_argument("--format", choices=FORMATS, default="edgelist")

    p = sub.add_parser("solve", help="compute the edge open packing number")
    graph_input(p)
    p.add_argument("--class", dest="cls", choices=CLASS_CHOICES, default="auto")
    p.add_argument("--witness", action="store_true", help="print the packing edges")
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True,
                   help="re-check the witness before printing (default: on)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-edges", type=int, default=SearchBudget().max_edges,
                   help="edge budget for the exhaustive solver")

    p = sub.add_parser("classify", help="list the classes the graph belongs to")
    graph_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("generate", help="write a seeded random graph")
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--n", type=int, default=10, help="vertices (pig, tree)")
    p.add_argument("--density", type=float, default=0.5, help="pig interval density in [0, 1]")
    p.add_argument("--blocks", type=int, default=4, help="number of blocks (block)")
    p.add_argument("--max-block-size", type=int, default=4, help="largest block (block)")
    p.add_argument("--k", type=int, default=4, help="clique size (split)")
    p.add_argument("--s", type=int, default=6, help="independent set size (split)")
    p.add_argument("--p", type=float, default=0.5, help="K-S edge probability (split)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("verify", help="check that an edge set is an edge open packing")
    p.add_argument("graph")
    p.add_argument("edges", help="file of 'u v' lines (0-based)")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("crosscheck", help="compare a class solver with the exhaustive oracle")
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true", help="one JSON record per instance")
    return parser


def _cmd_solve(args, stdin, out) -> int:
    g = parse_graph(_read(args.input, stdin), args.format)
    tag, sol = solve(g, args.cls, SearchBudget(max_edges=max(1, args.max_edges)))
    verified = False
    if args.verify:
        ok, triple = is_eop_set(g, sol.witness)
        if not ok or len(sol.witness) != sol.value:
            raise InternalError(f"solver returned an invalid witness: {triple}")
        verified = True
    if args.json:
        out.write(_dump({
            "class": tag,
            "n": g.n,
            "m": g.m,
            "value": sol.value,
            "witness": [list(e) for e in sol.witness],
            "verified": verified,
        }) + "\n")
    else:
        out.write(f"{sol.value}\n")
        if args.witness:
            for u, v in sol.witness:
                out.write(f"{u} {v}\n")
    return EXIT_OK


def _cmd_classify(args, stdin, out) -> int:
    g = parse_graph(_read(args.input, stdin), args.format)
    tags = classify(g)
    out.write((_dump(list(tags)) if args.json else " ".join(tags)) + "\n")
    return EXIT_OK


def _cmd_generate(args, stdin, out) -> int:
    try:
        if args.cls == "pig":
            g = gen_proper_interval(args.n, args.density, args.seed)
        elif args.cls == "block":
            g = gen_block(args.blocks, args.max_block_size, args.seed)
        elif args.cls == "split":
            g = gen_split(args.k, args.s, args.p, args.seed)
        else:
            g = gen_tree(args.n, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = serialize_graph(g, args.format)
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _cmd_verify(args, stdin, out) -> int:
    g = parse_graph(_read(args.graph, stdin), args.format)
    d = parse_edge_set(_read(args.edges, stdin))
    ok, triple = is_eop_set(g, d)
    if args.json:
        conflict = [list(e) for e in triple] if triple else None
        out.write(_dump({"valid": ok, "size": len(d), "conflict": conflict}) + "\n")
    elif ok:
        out.write("valid\n")
    else:
        e1, e2, e = triple
        out.write(f"invalid: {e1} and {e2} share common edge {e}\n")
    return EXIT_OK if ok else EXIT_NOT_IN_CLASS


def _cmd_crosscheck(args, stdin, out) -> int:
    if args.count < 0:
        raise InputError("count must be non-negative")
    records = run_crosscheck(args.cls, args.count, args.seed, args.max_n, args.jobs)
    agree = 0
    for r in records:
        if args.json:
            out.write(_dump(r.as_json()) + "\n")
        if r.ok:
            agree += 1
        elif not args.json:
            out.write(f"mismatch at instance {r.index}: solver {r.value}, oracle {r.oracle}, n={r.n} m={r.m}\n")
    out.write(f"{agree}/{len(records)} agree\n")
    return EXIT_OK if agree == len(records) else EXIT_MISMATCH


_COMMANDS = {
    "solve": _cmd_solve,
    "classify": _cmd_classify,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "crosscheck": _cmd_crosscheck,
}


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return _COMMANDS[args.command](args, stdin, stdout)
    except NotInClass as exc:
        stderr.write(f"edgepack: {exc}\n")
        return EXIT_NOT_IN_CLASS
    except InputError as exc:
        stderr.write(f"edgepack: input error: {exc}\n")
        return EXIT_INPUT
    except (InternalError, AssertionError) as exc:
        stderr.write(f"edgepack: internal error: {exc}\n")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
