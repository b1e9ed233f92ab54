"""``ndcolor`` command line: one subcommand per pipeline stage.

Results go to stdout in the owning module's text format, diagnostics to
stderr.  Exit status: 0 success, 1 invalid input or failed verification,
2 solver budget exhausted.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .classcheck import check_class, write_report
from .graph import parse_dimacs, write_dimacs
from .ilp import BudgetExceeded, parse_ilp_dump, write_ilp_dump
from .mis import MisFamily, enumerate_mis
from .nd import (NdDecomposition, build_type_graph, compute_nd_decomposition, parse_type_graph,
                 write_type_graph)
from .pipeline import (color_graph, color_type_graph, parse_coloring, verify_coloring,
                       write_coloring)
from . import testkit

EXIT_OK, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("NDCOLOR_BUDGET")
    return int(env) if env else None


def format_decomposition(dec: NdDecomposition) -> str:
    lines = [f"k {dec.k}"]
    for cls, kind in zip(dec.classes, dec.kinds):
        lines.append(f"c {kind.tag} " + " ".join(str(v + 1) for v in cls))
    return "\n".join(lines) + "\n"


def format_family(fam: MisFamily) -> str:
    return "".join(" ".join(str(i + 1) for i in s) + "\n" for s in fam.sets)


def _cmd_color(args, out) -> int:
    budget = _budget(args)
    text = _read(args.input)
    if args.from_typegraph:
        res = color_type_graph(parse_type_graph(text), budget)
    else:
        res = color_graph(parse_dimacs(text), budget)
    if args.dump_ilp:
        sys.stderr.write(write_ilp_dump(res.ilp))
    out.write(write_coloring(res.coloring))
    return EXIT_OK


def _cmd_nd(args, out) -> int:
    out.write(format_decomposition(compute_nd_decomposition(parse_dimacs(_read(args.input)))))
    return EXIT_OK


def _cmd_typegraph(args, out) -> int:
    g = parse_dimacs(_read(args.input))
    out.write(write_type_graph(build_type_graph(g, compute_nd_decomposition(g))))
    return EXIT_OK


def _cmd_mis(args, out) -> int:
    out.write(format_family(enumerate_mis(parse_type_graph(_read(args.input)))))
    return EXIT_OK


def _cmd_check_class(args, out) -> int:
    out.write(write_report(check_class(parse_dimacs(_read(args.input)))))
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    g = parse_dimacs(_read(args.graph))
    verdict = verify_coloring(g, parse_coloring(_read(args.coloring)))
    if verdict.ok:
        out.write("ok\n")
        return EXIT_OK
    if verdict.bad_edge is not None:
        u, v = verdict.bad_edge
        out.write(f"fail edge {u + 1} {v + 1}\n")
    else:
        out.write(f"fail unused-color {verdict.unused_color}\n")
    return EXIT_INVALID


def _cmd_gen(args, out) -> int:
    spec = testkit.GeneratorSpec(
        kind=args.kind, seed=args.seed, n=args.n, p=args.p, k_min=args.k_min, k_max=args.k_max,
        w_min=args.w_min, w_max=args.w_max, loop_prob=args.loop_prob, edge_prob=args.edge_prob,
        shuffle=args.shuffle)
    inst = testkit.generate(spec)
    if args.format == "dimacs":
        out.write(write_dimacs(inst.graph))
    elif args.format == "typegraph":
        if inst.type_graph is None:
            raise ValueError(f"{args.kind} instances have no type graph")
        out.write(write_type_graph(inst.type_graph))
    else:
        out.write(inst.manifest_line() + "\n")
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    text = _read(args.input)
    if args.what == "chi":
        out.write(f"s {testkit.oracle_chromatic(parse_dimacs(text))}\n")
    elif args.what == "nd":
        out.write(format_decomposition(testkit.oracle_nd(parse_dimacs(text))))
    elif args.what == "mis":
        out.write(format_family(testkit.oracle_mis(parse_type_graph(text))))
    else:
        out.write(f"o {testkit.oracle_ilp(parse_ilp_dump(text))}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ndcolor", description="Exact coloring through neighborhood diversity.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("color", help="exact coloring of a DIMACS graph (or a type graph)")
    p.add_argument("--from-typegraph", action="store_true",
                   help="input is a type graph; color its blow-up")
    p.add_argument("--dump-ilp", action="store_true", help="write the covering ILP to stderr")
    p.add_argument("--budget", type=int, help="branch-and-bound node budget (env NDCOLOR_BUDGET)")
    p.add_argument("input")
    p.set_defaults(func=_cmd_color)

    for name, func, help_ in (("nd", _cmd_nd, "neighborhood-diversity classes"),
                              ("typegraph", _cmd_typegraph, "type graph of a DIMACS graph"),
                              ("mis", _cmd_mis, "maximal independent sets of a type graph"),
                              ("check-class", _cmd_check_class,
                               "(4K1, C4, C6)-freeness and C7 containment")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="seeded instance generator")
    p.add_argument("--kind", required=True, choices=testkit.KINDS)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--k-min", type=int, default=7)
    p.add_argument("--k-max", type=int, default=13)
    p.add_argument("--w-min", type=int, default=1)
    p.add_argument("--w-max", type=int, default=4)
    p.add_argument("--loop-prob", type=float, default=0.5)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--shuffle", action="store_true")
    p.add_argument("--format", choices=("dimacs", "typegraph", "manifest"), default="dimacs")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="brute-force reference answers")
    p.add_argument("what", choices=("chi", "nd", "mis", "ilp"))
    p.add_argument("input")
    p.set_defaults(func=_cmd_oracle)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"ndcolor: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"ndcolor: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
