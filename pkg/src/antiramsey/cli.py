"""Command-line surface: every capability scriptable, JSON on stdout.

Subcommands: formula, qcover, construct, rainbow, oracle, verify.  Human
logs go to stderr only; stdout carries a single JSON document so outputs are
byte-stable (pass --no-meta to also drop timing fields).

Exit codes: 0 success, 1 usage or input error, 2 infeasible host or
exhausted search budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .colorings import parse_coloring, serialize_coloring
from .constructions import clique_coloring, color_count, cover_coloring
from .formulas import UnrecognizedFamilyError, ar_family
from .graphs import Graph, build_pattern, parse_family, parse_graph
from .oracle import HARD_CEILING, max_rainbow_free, verify_range
from .qcover import q_cover
from .rainbow import find_rainbow

USAGE_ERROR = 1
INFEASIBLE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(USAGE_ERROR)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load_pattern(args):
    if getattr(args, "family", None):
        return parse_family(args.family)
    with open(args.graph, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _cmd_formula(args) -> int:
    spec = parse_family(args.family)
    if (args.n is None) == (args.grid is None):
        print("need exactly one of --n or --grid", file=sys.stderr)
        return USAGE_ERROR
    if args.grid:
        lo, _, hi = args.grid.partition("..")
        try:
            ns = range(int(lo), int(hi) + 1)
        except ValueError:
            print(f"bad grid {args.grid!r}, expected 'N1..N2'", file=sys.stderr)
            return USAGE_ERROR
        _emit([ar_family(n, spec).to_json() for n in ns])
    else:
        _emit(ar_family(args.n, spec).to_json())
    return 0


def _cmd_qcover(args) -> int:
    pattern = _load_pattern(args)
    g = pattern if isinstance(pattern, Graph) else build_pattern(pattern)
    _emit(q_cover(g, args.j).to_json())
    return 0


def _cmd_construct(args) -> int:
    if args.mode == "lemma":
        if args.r1 is None or args.s is None:
            print("--mode lemma needs --r1 and --s", file=sys.stderr)
            return USAGE_ERROR
        coloring = cover_coloring(args.n, args.r1, args.s)
    else:
        if args.m is None:
            print("--mode clique needs --m", file=sys.stderr)
            return USAGE_ERROR
        coloring = clique_coloring(args.n, args.m)
    text = serialize_coloring(coloring)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    _emit({"mode": args.mode, "n": args.n,
           "colors": color_count(coloring), "out": args.out})
    return 0


def _cmd_rainbow(args) -> int:
    with open(args.coloring, encoding="utf-8") as fh:
        coloring = parse_coloring(fh.read())
    pattern = _load_pattern(args)
    emb = find_rainbow(coloring, pattern)
    if emb is None:
        _emit({"found": False, "map": None})
    else:
        _emit({"found": True, "map": list(emb.map)})
    return 0


def _cmd_oracle(args) -> int:
    spec = parse_family(args.family)
    if args.n > HARD_CEILING:
        print(f"n={args.n} beyond the exhaustive-search ceiling "
              f"({HARD_CEILING})", file=sys.stderr)
        return INFEASIBLE

    def log_progress(nodes, best):
        print(f"explored {nodes} nodes, best so far {best}", file=sys.stderr)

    result = max_rainbow_free(args.n, spec, args.budget, on_progress=log_progress)
    print(f"explored {result.nodes_explored} nodes total", file=sys.stderr)
    _emit(result.to_json(meta=not args.no_meta))
    return 0 if result.conclusive else INFEASIBLE


def _cmd_verify(args) -> int:
    spec = parse_family(args.family)
    report = verify_range(spec, args.n_from, args.n_to, args.budget)
    _emit(report.to_json())
    return 0


def main(argv=None) -> int:
    parser = _Parser(prog="antiramsey",
                     description="anti-Ramsey bounds, colorings, and exact search")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="evaluate the closed form for a family")
    p.add_argument("--family", required=True,
                   help="family text, e.g. P5, C4, 3P2, C3+2P2")
    p.add_argument("--n", type=int)
    p.add_argument("--grid", help="evaluate over a range, e.g. 10..20")
    p.add_argument("--no-meta", action="store_true")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("qcover", help="minimum vertices incident with all but <= j edges")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family")
    src.add_argument("--graph", help="edge-list file")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--no-meta", action="store_true")
    p.set_defaults(func=_cmd_qcover)

    p = sub.add_parser("construct", help="emit an extremal coloring file")
    p.add_argument("--mode", choices=["lemma", "clique"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r1", type=int, help="cover size (lemma mode)")
    p.add_argument("--s", type=int, help="inner color count (lemma mode)")
    p.add_argument("--m", type=int, help="clique size (clique mode)")
    p.add_argument("--out", required=True, help="output coloring file")
    p.add_argument("--no-meta", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("rainbow", help="search a coloring for a rainbow pattern copy")
    p.add_argument("--coloring", required=True, help="coloring file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family")
    src.add_argument("--graph", help="edge-list file")
    p.add_argument("--no-meta", action="store_true")
    p.set_defaults(func=_cmd_rainbow)

    p = sub.add_parser("oracle", help="exact anti-Ramsey value by exhaustive search")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, help="node budget (default: unlimited, capped host)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker count; results are identical for any value")
    p.add_argument("--no-meta", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="oracle vs closed form over an n range")
    p.add_argument("--family", required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--no-meta", action="store_true")
    p.set_defaults(func=_cmd_verify)

    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) is not None and getattr(args, "threads", 1) < 1:
        print("--threads must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.func(args)
    except (UnrecognizedFamilyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
