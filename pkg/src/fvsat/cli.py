"""Command-line front end.

Verbs: reduce, repgraph, solve, check, flow, c1p, gen.  All reports are
line-oriented `key value` pairs with stable ordering, so identical
inputs and seeds produce byte-identical output.  Human-facing
diagnostics go to stderr.

Exit codes: 0 affirmative or success, 1 negative answer (unsat, not
reducible, not C1P, no acyclic FVS), 2 usage or format error, 3 size or
cycle guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import c1p as c1p_mod
from . import flowgraph as flow_mod
from .digraph import (CyclicError, Digraph, EdgeListError, LimitExceeded,
                      NotFlowGraphError, dfs_tree, format_edge_list,
                      read_edge_list, to_dot)
from .fvs import (GammaCyclicError, LROrder, NoAcyclicFvs, SizeGuardError,
                  brute_amfvs, brute_mfvs, brute_min_ones, verify_lr_order)
from .reduction import (format_mapping, normalize_clauses, to_mnae,
                        two_choice_instance)
from .sat import (DimacsError, Formula, Mode, NotMonotoneError, format_dimacs,
                  gen_3sat, is_3c_digraph, is_strongly_3_covered_form,
                  parse_dimacs, representative_graph)

_EXIT_OK = 0
_EXIT_NO = 1
_EXIT_USAGE = 2
_EXIT_GUARD = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _read_graph(path: str) -> Digraph:
    return read_edge_list(_read_input(path))


def _read_formula(path: str, allow_repeated: bool = False) -> Formula:
    return parse_dimacs(_read_input(path), allow_repeated_vars=allow_repeated)


def _ids(values) -> str:
    return " ".join(str(v) for v in values)


def _parse_id_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.replace(",", " ").split()]


def _print_lr(lro: LROrder) -> None:
    print(f"order {_ids(lro.order)}")
    print("sides " + " ".join(
        "R" if v in lro.right else "L" for v in lro.order))
    print(f"right {_ids(sorted(lro.right))}")


def _cmd_reduce(args) -> int:
    c = normalize_clauses(_read_formula(args.infile, allow_repeated=True))
    inst = two_choice_instance(c)
    dimacs = format_dimacs(inst.formula)
    mapping = format_mapping(inst.map)
    if args.out:
        Path(args.out).write_text(dimacs)
    else:
        sys.stdout.write(dimacs)
    if args.map:
        Path(args.map).write_text(mapping)
    elif not args.out:
        sys.stdout.write(mapping)
    print(f"D={inst.d}")
    return _EXIT_OK


def _cmd_repgraph(args) -> int:
    f = _read_formula(args.infile)
    g = representative_graph(f)
    if args.dot:
        sys.stdout.write(to_dot(g))
    else:
        sys.stdout.write(format_edge_list(g))
    return _EXIT_OK


def _cmd_solve(args) -> int:
    if args.problem == "min-ones":
        f = _read_formula(args.infile)
        mode = Mode.NAE if args.mode == "nae" else Mode.STANDARD
        res = brute_min_ones(f, mode, guard=args.guard)
        print(f"value {res.value}")
        if res.witness is None:
            print("witness none")
            return _EXIT_NO
        print(f"witness {_ids(sorted(res.witness))}")
        return _EXIT_OK
    g = _read_graph(args.infile)
    solver = brute_mfvs if args.problem == "mfvs" else brute_amfvs
    res = solver(g, guard=args.guard)
    if isinstance(res, NoAcyclicFvs):
        print("value none")
        return _EXIT_NO
    print(f"value {res.value}")
    print(f"witness {_ids(sorted(res.witness))}")
    return _EXIT_OK


def _cmd_check(args) -> int:
    if args.property == "3c":
        g = _read_graph(args.infile)
        ok = is_3c_digraph(g, cycle_limit=args.limit)
    elif args.property == "s3c":
        f = _read_formula(args.infile)
        ok = is_strongly_3_covered_form(f, cycle_limit=args.limit)
    elif args.property == "lr":
        g = _read_graph(args.infile)
        if args.order is None:
            print("check lr needs --order", file=sys.stderr)
            return _EXIT_USAGE
        order = tuple(_parse_id_list(args.order))
        right = frozenset(_parse_id_list(args.right or ""))
        ok = verify_lr_order(g, LROrder(order, right))
    elif args.property == "flow-reducible":
        g = _read_graph(args.infile)
        fa = flow_mod.reducibility(g, args.source)
        if not fa.reducible:
            print("result false")
            print(f"witness {fa.failure[0]} {fa.failure[1]}")
            return _EXIT_NO
        ok = True
    else:
        return _check_c1p(args)
    print(f"result {'true' if ok else 'false'}")
    return _EXIT_OK if ok else _EXIT_NO


def _sniff_matrix(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return not line.startswith("p dg")
    return True


def _check_c1p(args) -> int:
    text = _read_input(args.infile)
    if _sniff_matrix(text):
        m = c1p_mod.read_matrix(text)
    else:
        m = c1p_mod.adjacency_matrix(read_edge_list(text))
    try:
        order = c1p_mod.c1p_good_order(m)
    except c1p_mod.NotC1P as exc:
        print("result false")
        print(f"witness {_ids(sorted(exc.rows))}")
        return _EXIT_NO
    print("result true")
    print(f"order {_ids(order)}")
    return _EXIT_OK


def _cmd_flow(args) -> int:
    g = _read_graph(args.infile)
    if args.action == "check":
        fa = flow_mod.reducibility(g, args.source)
        if not fa.reducible:
            print("result false")
            print(f"witness {fa.failure[0]} {fa.failure[1]}")
            return _EXIT_NO
        print("result true")
        return _EXIT_OK
    if args.action == "lr-order":
        try:
            lro = flow_mod.lr_ordering(g, args.source)
        except flow_mod.NotReducibleError as exc:
            print("result false")
            print(f"witness {exc.failure[0]} {exc.failure[1]}")
            return _EXIT_NO
        _print_lr(lro)
        return _EXIT_OK
    fa = flow_mod.reducibility(g, args.source)
    if args.dot:
        sys.stdout.write(to_dot(g, fa.dfst))
        return _EXIT_OK if fa.reducible else _EXIT_NO
    print(f"source {args.source}")
    print(f"reducible {'true' if fa.reducible else 'false'}")
    if fa.failure is not None:
        print(f"failure {fa.failure[0]} {fa.failure[1]}")
    print(f"heads {_ids(fa.heads)}".rstrip())
    order = fa.heads + (args.source,) if fa.reducible else fa.heads
    for w in order:
        if fa.pstar is not None and w in fa.pstar:
            print(f"pstar {w} {_ids(sorted(fa.pstar[w]))}".rstrip())
    print("vertex\tpo\tsn\thn")
    for v in g.sorted_vertices():
        sn = fa.sn[v] if fa.sn is not None else "-"
        hn = fa.hn[v] if fa.hn is not None else "-"
        print(f"{v}\t{fa.dfst.po[v]}\t{sn}\t{hn}")
    if fa.reducible:
        print(f"reduction-order {_ids(flow_mod.reduction_order(fa))}")
    return _EXIT_OK if fa.reducible else _EXIT_NO


def _cmd_c1p(args) -> int:
    text = _read_input(args.infile)
    if args.action == "lr-order":
        if _sniff_matrix(text):
            m = c1p_mod.read_matrix(text)
            arcs = {(i + 1, j + 1)
                    for i, row in enumerate(m.entries)
                    for j, x in enumerate(row) if x}
            g = Digraph(max(m.row_count, m.col_count), arcs)
        else:
            g = read_edge_list(text)
        try:
            lro = c1p_mod.lr_order_from_c1p(g)
        except c1p_mod.NotC1P as exc:
            print(f"witness {_ids(sorted(exc.rows))}")
            return _EXIT_NO
        _print_lr(lro)
        return _EXIT_OK
    if _sniff_matrix(text):
        m = c1p_mod.read_matrix(text)
        labels = list(range(m.col_count))
    else:
        g = read_edge_list(text)
        m = c1p_mod.adjacency_matrix(g)
        labels = list(g.sorted_vertices())
    try:
        order = c1p_mod.c1p_good_order(m)
    except c1p_mod.NotC1P as exc:
        print(f"witness {_ids(sorted(exc.rows))}")
        return _EXIT_NO
    print(f"order {_ids(labels[j] for j in order)}")
    return _EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "3sat":
        f = gen_3sat(args.seed, args.vars, args.clauses,
                     monotone=args.monotone)
        sys.stdout.write(format_dimacs(f))
        return _EXIT_OK
    if args.kind == "reducible":
        g = flow_mod.gen_reducible(args.seed, args.vertices, args.extra)
        sys.stdout.write(format_edge_list(g))
        return _EXIT_OK
    fam = c1p_mod.gen_interval_point_family(args.seed, args.count)
    if args.graph:
        sys.stdout.write(format_edge_list(c1p_mod.interval_point_digraph(fam)))
        return _EXIT_OK
    for i in range(fam.n):
        lo, hi = fam.intervals[i]
        print(f"v {i + 1} interval {lo} {hi} point {fam.points[i]}")
    return _EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fvsat",
        description="Feedback vertex sets, monotone NAE satisfiability, "
                    "reducible flow graphs, and consecutive-ones orders.")
    sub = p.add_subparsers(dest="verb", required=True)

    reduce_p = sub.add_parser(
        "reduce", help="rewrite a 3-CNF into its two-choice NAE form")
    reduce_p.add_argument("--in", dest="infile", required=True,
                          help="input DIMACS file, or - for stdin")
    reduce_p.add_argument("--out", help="write the output DIMACS here")
    reduce_p.add_argument("--map", help="write the variable mapping here")
    reduce_p.set_defaults(func=_cmd_reduce)

    rep_p = sub.add_parser(
        "repgraph", help="representative digraph of a monotone 3-CNF")
    rep_p.add_argument("--in", dest="infile", required=True)
    rep_p.add_argument("--dot", action="store_true",
                       help="emit DOT instead of an edge list")
    rep_p.set_defaults(func=_cmd_repgraph)

    solve_p = sub.add_parser("solve", help="exact small-instance optima")
    solve_p.add_argument("problem", choices=("mfvs", "amfvs", "min-ones"))
    solve_p.add_argument("--in", dest="infile", required=True)
    solve_p.add_argument("--mode", choices=("standard", "nae"),
                         default="standard",
                         help="satisfaction mode for min-ones")
    solve_p.add_argument("--guard", type=int, default=64,
                         help="refuse instances above this size")
    solve_p.set_defaults(func=_cmd_solve)

    check_p = sub.add_parser("check", help="boolean structure checks")
    check_p.add_argument("property",
                         choices=("3c", "s3c", "lr", "flow-reducible", "c1p"))
    check_p.add_argument("--in", dest="infile", required=True)
    check_p.add_argument("--limit", type=int, default=10 ** 6,
                         help="cycle enumeration cap for 3c and s3c")
    check_p.add_argument("--order", help="vertex order for lr, ids separated "
                                         "by spaces or commas")
    check_p.add_argument("--right", help="Right-side vertex ids for lr")
    check_p.add_argument("--source", type=int, default=1,
                         help="flow graph source for flow-reducible")
    check_p.set_defaults(func=_cmd_check)

    flow_p = sub.add_parser("flow", help="reducible flow graph analysis")
    flow_p.add_argument("action", choices=("analyze", "check", "lr-order"))
    flow_p.add_argument("--in", dest="infile", required=True)
    flow_p.add_argument("--source", type=int, default=1)
    flow_p.add_argument("--dot", action="store_true",
                        help="emit DOT with arc classes instead of tables")
    flow_p.set_defaults(func=_cmd_flow)

    c1p_p = sub.add_parser(
        "c1p", help="consecutive-ones recognition and LR-orders")
    c1p_p.add_argument("action", nargs="?", default="good-order",
                       choices=("good-order", "lr-order"))
    c1p_p.add_argument("--in", dest="infile", required=True,
                       help="matrix file or edge list (sniffed by header)")
    c1p_p.set_defaults(func=_cmd_c1p)

    gen_p = sub.add_parser("gen", help="seed-deterministic generators")
    gen_p.add_argument("kind", choices=("3sat", "reducible", "ipd"))
    gen_p.add_argument("--seed", type=int, required=True)
    gen_p.add_argument("--vars", type=int, default=4,
                       help="variable count for 3sat")
    gen_p.add_argument("--clauses", type=int, default=4,
                       help="clause count for 3sat")
    gen_p.add_argument("--monotone", action="store_true",
                       help="generate positive literals only")
    gen_p.add_argument("--vertices", type=int, default=8,
                       help="vertex count for reducible")
    gen_p.add_argument("--extra", type=int, default=8,
                       help="extra arc attempts for reducible")
    gen_p.add_argument("--count", type=int, default=8,
                       help="family size for ipd")
    gen_p.add_argument("--graph", action="store_true",
                       help="emit the interval-point digraph instead")
    gen_p.set_defaults(func=_cmd_gen)
    return p


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return _EXIT_OK if exc.code in (0, None) else _EXIT_USAGE
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return _EXIT_GUARD
    except LimitExceeded as exc:
        print(f"cycle limit exceeded: {exc}", file=sys.stderr)
        return _EXIT_GUARD
    except (DimacsError, EdgeListError, c1p_mod.MatrixError,
            NotMonotoneError, NotFlowGraphError, CyclicError,
            GammaCyclicError, c1p_mod.LoopError, OSError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
