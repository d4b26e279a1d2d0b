"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` rejects a cover or ``trail``
finds nothing, 2 on usage, input, or file errors.
"""

import argparse
import sys
from pathlib import Path

from .bench import run_instance, write_counterexample
from .cover import solve_nmvc, verify_cover
from .extension import extend_graph, write_report_rows
from .generators import MODELS, generate
from .graph import GraphError
from .io import read_edge_list, serialize_edge_list, write_trace
from .oracle import DEFAULT_LIMIT, exact_nmvc
from .reduction import reduce
from .rng import RandomSource
from .trails import find_n_trail


class UsageError(Exception):
    pass


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def n_list(text):
    try:
        values = [positive_int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty --n list")
    return values


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nmvc", description="Approximate N-distance minimal vertex covers."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, graph=True, n=True, seeded=False):
        p = sub.add_parser(name, help=help)
        if graph:
            p.add_argument("--graph", required=True, help="edge-list file")
        if n:
            p.add_argument("--n", type=positive_int, required=True, help="distance bound N")
        if seeded:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--deterministic", action="store_true",
                           help="lexicographic tie-breaking instead of random choices")
        return p

    p = add("solve", "approximate N-distance cover", seeded=True)
    p.add_argument("--trace", help="write the reduction trace here")

    p = add("exact", "exact minimum N-distance cover (small graphs)")
    p.add_argument("--oracle-limit", type=positive_int, default=DEFAULT_LIMIT)

    p = add("verify", "check a cover")
    p.add_argument("--cover", required=True, help="comma-separated vertex names")

    p = add("reduce", "reduce G to G'", seeded=True)
    p.add_argument("--out", help="write G' here instead of stdout")
    p.add_argument("--trace", help="write the reduction trace here")

    p = add("extend", "build the extended graph G''", seeded=True)
    p.add_argument("--out", help="write G'' here instead of stdout")

    add("trail", "find one N-trail", seeded=True)

    p = add("gen", "generate a graph", graph=False, n=False)
    p.add_argument("--model", required=True, choices=sorted(MODELS))
    p.add_argument("--k", type=positive_int, required=True, help="size parameter")
    p.add_argument("--p", type=float, help="edge probability (gnp)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the graph here instead of stdout")

    p = sub.add_parser("bench", help="matching bound report over a directory of graphs")
    p.add_argument("--graph", required=True, help="directory of edge-list files")
    p.add_argument("--n", type=n_list, required=True, help="N, or a comma-separated list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deterministic", action="store_true")
    p.add_argument("--csv", help="append report rows here instead of stdout")
    p.add_argument("--out", help="directory for counterexample files")
    p.add_argument("--oracle-limit", type=positive_int, default=DEFAULT_LIMIT)
    return parser


def _rng(args):
    return RandomSource(args.seed, args.deterministic)


def _emit(text, out, stdout):
    if out:
        Path(out).write_text(text)
    else:
        stdout.write(text)


def cmd_solve(args, g, stdout):
    sol = solve_nmvc(g, args.n, _rng(args))
    for v in sorted(sol.cover):
        print(g.label(v), file=stdout)
    print(f"size={sol.size} repaired={sol.repaired_count} seed={args.seed}", file=stdout)
    if args.trace:
        Path(args.trace).write_text(write_trace(g, sol.events))
    return 0


def cmd_exact(args, g, stdout):
    res = exact_nmvc(g, args.n, limit=args.oracle_limit)
    for v in sorted(res.optimum):
        print(g.label(v), file=stdout)
    print(f"size={res.size} explored={res.explored}", file=stdout)
    return 0


def cmd_verify(args, g, stdout):
    ids = {g.label(v): v for v in g.vertices}
    names = [t.strip() for t in args.cover.split(",") if t.strip()]
    missing = [t for t in names if t not in ids]
    if missing:
        raise UsageError(f"unknown vertices in --cover: {', '.join(missing)}")
    ok, witness = verify_cover(g, {ids[t] for t in names}, args.n)
    if ok:
        print("valid", file=stdout)
        return 0
    print(f"uncovered {g.label(witness)}", file=stdout)
    return 1


def _reduction(args, g):
    if args.n < 2:
        return g, []
    # same stream tag as solve, so reduce/extend replay the solver's reduction
    state, events = reduce(g, args.n, _rng(args).spawn("reduce"))
    return state.graph, events


def cmd_reduce(args, g, stdout):
    g_prime, events = _reduction(args, g)
    _emit(serialize_edge_list(g_prime), args.out, stdout)
    if args.trace:
        Path(args.trace).write_text(write_trace(g, events))
    return 0


def cmd_extend(args, g, stdout):
    _, events = _reduction(args, g)
    ext = extend_graph(g, events, args.n)
    _emit(serialize_edge_list(ext.graph), args.out, stdout)
    return 0


def cmd_trail(args, g, stdout):
    if args.n < 2:
        raise UsageError("trail search needs --n >= 2")
    trail = find_n_trail(g, args.n, _rng(args).spawn("reduce"))
    if trail is None:
        print("none", file=stdout)
        return 1
    print(" ".join(g.label(v) for v in trail.vertices), file=stdout)
    return 0


def cmd_gen(args, stdout):
    g = generate(args.model, args.k, args.p, seed=args.seed)
    _emit(serialize_edge_list(g), args.out, stdout)
    return 0


def cmd_bench(args, stdout):
    folder = Path(args.graph)
    if not folder.is_dir():
        raise UsageError(f"--graph must be a directory for bench: {folder}")
    files = sorted(p for p in folder.iterdir() if p.is_file() and not p.name.startswith("."))
    rows, holds, fails, repaired = [], 0, 0, 0
    for path in files:
        g = read_edge_list(path)
        for n in args.n:
            res = run_instance(path.stem, g, n, args.seed, args.deterministic, args.oracle_limit)
            rows.append(res.report.row(path.stem))
            if res.report.bound_eq8_holds:
                holds += 1
            else:
                fails += 1
                if args.out:
                    r = res.report
                    write_counterexample(args.out, path.stem, g, n, "eq8", [
                        f"m_prime={r.m_prime} m_dprime={r.m_dprime} n_effective={r.n_effective}",
                    ])
            if res.solution.repaired_count:
                repaired += 1
                if args.out:
                    write_counterexample(args.out, path.stem, g, n, "repair", [
                        f"repaired={res.solution.repaired_count} seed={args.seed}",
                    ])
    if args.csv:
        csv_path = Path(args.csv)
        header = not csv_path.exists() or csv_path.stat().st_size == 0
        with csv_path.open("a") as fh:
            write_report_rows(fh, rows, header=header)
    else:
        write_report_rows(stdout, rows)
    print(f"instances={len(rows)} eq8_holds={holds} eq8_fails={fails} repaired={repaired}",
          file=sys.stderr if not args.csv else stdout)
    return 0


COMMANDS = {
    "solve": cmd_solve,
    "exact": cmd_exact,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "extend": cmd_extend,
    "trail": cmd_trail,
}


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args, stdout)
        if args.command == "bench":
            return cmd_bench(args, stdout)
        g = read_edge_list(args.graph)
        return COMMANDS[args.command](args, g, stdout)
    except (UsageError, GraphError, OSError, ValueError) as exc:
        print(f"nmvc {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
