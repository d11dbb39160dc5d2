"""Command-line interface.

Exit codes: 0 success (all claims pass / property holds), 1 a claim or
queried property fails, 2 usage or input error.

Objects are given either as a file in one of the text formats of
``unituran.io`` or by name:

  digraphs     T<s>  C3  K<s>  empty:<n>  T4prime[:dominating]
               turan:<n>:<r>  d10:<n>  d10pattern[:dominating]
  3-graphs     complete:<m>  k4minus  f5star  tight_cycle:<l>  F4  F7  FH:<k>
  palettes     Qr:<r>  Q2r:<m>  Qminus3  Qplus1_5  Qplus2_5  QprimeMinus3
               full:<m>  left:<digraph>  right:<digraph>  union:<digraph>:<digraph>
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import coloring, digraph, extremal, hypergraph, io, palette, suites


class UsageError(Exception):
    pass


def _from_file(spec, kinds):
    if not os.path.exists(spec):
        return None
    obj = io.load(spec)
    if not isinstance(obj, kinds):
        raise UsageError(f"{spec} holds a {type(obj).__name__}, expected {' or '.join(k.__name__ for k in kinds)}")
    return obj


def _int(text, what):
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def parse_digraph_spec(spec: str) -> digraph.Digraph:
    found = _from_file(spec, (digraph.Digraph,))
    if found is not None:
        return found
    head, _, rest = spec.partition(":")
    if head == "C3":
        return digraph.cycle3()
    if head == "T4prime":
        return digraph.four_tournament_with_cycle(strong=rest != "dominating")
    if head == "d10pattern":
        return digraph.d10_pattern(strong=rest != "dominating")
    if head == "turan":
        n, _, r = rest.partition(":")
        return digraph.bidirected_turan(_int(n, "n"), _int(r, "r"))
    if head == "d10":
        return digraph.d10_family(_int(rest, "n"))
    if head == "empty":
        return digraph.empty_digraph(_int(rest, "n"))
    if head[:1] in ("T", "K") and head[1:].isdigit():
        s = int(head[1:])
        return digraph.transitive_tournament(s) if head[0] == "T" else digraph.complete_digraph(s)
    raise UsageError(f"unknown digraph {spec!r} (not a file or a known name)")


def parse_threegraph_spec(spec: str) -> hypergraph.ThreeGraph:
    found = _from_file(spec, (hypergraph.ThreeGraph,))
    if found is not None:
        return found
    head, *params = spec.split(":")
    if head in ("F4", "F7"):
        return hypergraph.single_edge_gadget(head)
    if head == "FH":
        return hypergraph.single_edge_gadget("FH", _int(params[0], "k") if params else None)
    return hypergraph.named_threegraph(head, *(_int(p, "parameter") for p in params))


def parse_palette_spec(spec: str) -> palette.Palette:
    found = _from_file(spec, (palette.Palette,))
    if found is not None:
        return found
    head, _, rest = spec.partition(":")
    if head in ("left", "right"):
        return palette.side_palette(parse_digraph_spec(rest), head)
    if head == "union":
        parts = rest.split(":")
        if len(parts) != 2:
            raise UsageError("union palettes are written union:<digraph>:<digraph>")
        return palette.digraph_union_palette(parse_digraph_spec(parts[0]), parse_digraph_spec(parts[1]))
    if head == "full":
        return palette.full_palette(_int(rest, "m"))
    params = [_int(p, "parameter") for p in rest.split(":")] if rest else []
    return palette.named_palette(head, *params)


def _parse_order(text: str, n: int) -> tuple:
    order = tuple(_int(x, "order entry") for x in text.replace(",", " ").split())
    if sorted(order) != list(range(n)):
        raise UsageError(f"--order must be a permutation of 0..{n - 1}")
    return order


# --------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    ids = list(suites.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in suites.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(suites.SUITES)} or all")
    reports = [suites.run_suite(s, parallel=args.parallel) for s in ids]
    for rep in reports:
        print(rep.text())
    if args.json:
        payload = [r.to_json() for r in reports] if len(reports) > 1 else reports[0].to_json()
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True, default=suites._jsonable)
    return 0 if all(r.passed for r in reports) else 1


def cmd_check_colorable(args) -> int:
    f = parse_threegraph_spec(args.graph)
    p = parse_palette_spec(args.palette)
    if args.order:
        order = _parse_order(args.order, f.n)
        phi = coloring.colorable_fixed_order(f, p, order)
        w = None if phi is None else coloring.ColoringWitness(order, phi)
        stats = ""
    else:
        if args.workers > 1:
            w = coloring.colorable(f, p, mode=args.mode, workers=args.workers)
            stats = ""
        else:
            res = coloring.solve_colorability(f, p, mode=args.mode)
            w = res.witness
            stats = f" (orders tried {res.orders_tried}, distinct edge orders {res.distinct_instances}, nodes {res.nodes})"
    if w is None:
        print(f"not colorable{stats}")
        return 1
    print(f"colorable{stats}")
    print(io.format_witness(w), end="")
    if args.witness_out:
        io.save(w, args.witness_out)
    return 0


def cmd_palette(args) -> int:
    p = parse_palette_spec(args.palette)
    if args.action == "density":
        d = palette.density(p)
        print(f"{d} ({float(d):.6f})")
        return 0
    if args.action == "reverse":
        print(io.format_palette(palette.reverse(p)), end="")
        return 0
    if args.action == "aux":
        print(io.format_digraph(palette.aux_digraph(p, args.side)), end="")
        return 0
    if args.other is None:
        raise UsageError(f"palette {args.action} needs a second palette")
    q = parse_palette_spec(args.other)
    if args.action == "union":
        print(io.format_palette(palette.union(p, q)), end="")
        return 0
    hom = palette.subpalette(p, q)
    if hom is None:
        print("not a subpalette")
        return 1
    print("subpalette via " + " ".join(f"{c}->{t}" for c, t in enumerate(hom.mapping)))
    return 0


def cmd_digraph(args) -> int:
    if args.action == "sum":
        if len(args.items) < 2:
            raise UsageError("digraph sum needs at least two digraphs")
        print(io.format_digraph(digraph.sum_of(*(parse_digraph_spec(s) for s in args.items))), end="")
        return 0
    if args.action == "turan":
        if len(args.items) != 2:
            raise UsageError("digraph turan needs n and r")
        n, r = (_int(x, "argument") for x in args.items)
        ex, f = digraph.turan_numbers(n, r)
        print(f"ex(n,K_r) = {ex}\n2 ex(n,K_r) = {f}")
        if args.show:
            print(io.format_digraph(digraph.bidirected_turan(n, r)), end="")
        return 0
    if args.action == "contains":
        if len(args.items) != 2:
            raise UsageError("digraph contains needs a host and a pattern")
        host, pattern = (parse_digraph_spec(s) for s in args.items)
        eta = digraph.contains(host, pattern)
        if eta is None:
            print("pattern-free")
            return 1
        print("copy at " + " ".join(f"{p}->{h}" for p, h in enumerate(eta)))
        return 0
    if args.action == "c3":
        if len(args.items) != 1:
            raise UsageError("digraph c3 needs one tournament")
        t = parse_digraph_spec(args.items[0])
        print(digraph.count_c3(t))
        return 0
    raise UsageError(f"unknown digraph action {args.action!r}")


def cmd_extremal(args) -> int:
    cache = extremal.default_cache(args.cache)
    if args.action == "ex":
        pat = parse_digraph_spec(args.pattern)
        res = extremal.ex_exact(pat, args.n, cache=cache, workers=args.workers)
        print(f"ex = {res.value} (nodes {res.nodes}, extremal classes {len(res.witnesses)})")
        if args.show:
            for d in res.witness_digraphs():
                print(io.format_digraph(d), end="")
        return 0
    if args.action == "good":
        pat = parse_digraph_spec(args.pattern)
        if args.r is not None and args.r != pat.n:
            raise UsageError(f"--r {args.r} does not match the pattern's {pat.n} vertices")
        good, rows = extremal.is_r_good_upto(pat, args.nmax, cache=cache)
        for row in rows:
            print(f"n={row.n} ex={row.ex} 2ex(n,K_r)={row.f} {'ok' if row.ok else 'differs'}")
        print(("r-good" if good else "not r-good") + f" for n <= {args.nmax} (prefix-verified only)")
        return 0 if good else 1
    if args.action == "gamma2":
        pat = parse_digraph_spec(args.pattern) if args.pattern else None
        value, witness = extremal.max_gamma2(args.r, args.n, pat)
        print(f"max gamma2 = {value}; bound ((r-2)/(r-1))^2 n^3 = {extremal.gamma2_bound(args.r, args.n)}")
        print(io.format_digraph(witness), end="")
        return 0
    raise UsageError(f"unknown extremal action {args.action!r}")


def cmd_hypergraph(args) -> int:
    if args.action == "make":
        if args.from_kgraph:
            h = io.load(args.from_kgraph)
            if not isinstance(h, hypergraph.LinearKGraph):
                raise UsageError(f"{args.from_kgraph} is not a k-graph")
            f = hypergraph.construct_from_linear(h, args.scheme)
        else:
            if not args.name:
                raise UsageError("hypergraph make needs a name or --from")
            f = parse_threegraph_spec(args.name)
        text = io.format_threegraph(f)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        print(text, end="")
        return 0
    if args.action == "monotone":
        if not args.name:
            raise UsageError("hypergraph monotone needs a k-graph file")
        h = io.load(args.name)
        if not isinstance(h, hypergraph.LinearKGraph):
            raise UsageError(f"{args.name} is not a k-graph")
        holds, sigma = hypergraph.monotone_edge_property(h)
        if holds:
            print("every permutation is monotone on some edge")
            return 0
        print("violating permutation sigma = " + " ".join(map(str, sigma)))
        return 1
    raise UsageError(f"unknown hypergraph action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unituran", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of {', '.join(suites.SUITES)}, or all")
    v.add_argument("--parallel", action="store_true", help="run independent claims concurrently")
    v.add_argument("--json", metavar="FILE", help="write the JSON report here")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check", help="colorability checks")
    csub = c.add_subparsers(dest="what", required=True)
    cc = csub.add_parser("colorable", help="decide whether a 3-graph is colorable by a palette")
    cc.add_argument("--graph", required=True)
    cc.add_argument("--palette", required=True)
    cc.add_argument("--order", help="fix the vertex order, e.g. '0 2 1 3'")
    cc.add_argument("--mode", choices=("full", "automorphism"), default="full")
    cc.add_argument("--workers", type=int, default=1)
    cc.add_argument("--witness-out", metavar="FILE")
    cc.set_defaults(func=cmd_check_colorable)

    p = sub.add_parser("palette", help="palette operations")
    p.add_argument("action", choices=("density", "subpalette", "reverse", "union", "aux"))
    p.add_argument("palette")
    p.add_argument("other", nargs="?")
    p.add_argument("--side", choices=("left", "right"), default="left", help="for aux")
    p.set_defaults(func=cmd_palette)

    d = sub.add_parser("digraph", help="digraph operations")
    d.add_argument("action", choices=("sum", "turan", "contains", "c3"))
    d.add_argument("items", nargs="*")
    d.add_argument("--show", action="store_true", help="also print the Turan digraph")
    d.set_defaults(func=cmd_digraph)

    e = sub.add_parser("extremal", help="exact extremal numbers")
    e.add_argument("action", choices=("ex", "good", "gamma2"))
    e.add_argument("--pattern")
    e.add_argument("--n", type=int)
    e.add_argument("--r", type=int)
    e.add_argument("--nmax", type=int)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--show", action="store_true", help="print the extremal digraphs")
    e.add_argument("--cache", help=f"cache file, or 'off' (default from ${extremal.CACHE_ENV})")
    e.set_defaults(func=cmd_extremal)

    h = sub.add_parser("hypergraph", help="3-graph and linear k-graph tools")
    h.add_argument("action", choices=("make", "monotone"))
    h.add_argument("name", nargs="?", help="3-graph name for make, k-graph file for monotone")
    h.add_argument("--from", dest="from_kgraph", metavar="KGRAPH", help="build from a linear k-graph file")
    h.add_argument("--scheme", choices=("FH", "F4", "F7"), default="FH")
    h.add_argument("--out", metavar="FILE")
    h.set_defaults(func=cmd_hypergraph)
    return parser


_REQUIRED = {
    ("extremal", "ex"): ("pattern", "n"),
    ("extremal", "good"): ("pattern", "nmax"),
    ("extremal", "gamma2"): ("r", "n"),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in _REQUIRED.get((args.command, getattr(args, "action", None)), ()):
        if getattr(args, name) is None:
            parser.error(f"{args.command} {args.action} requires --{name}")
    try:
        return args.func(args)
    except (UsageError, io.FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
