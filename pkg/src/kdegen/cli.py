"""Command-line front end: ``kdegen <subcommand> [options]``.

Exit status is 0 on success, 1 on unreadable or malformed input and 2 on
usage errors.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Sequence

from . import approx, biclique, cliques, fixed, oracle
from .bench import BENCH_OPS, run_bench, write_csv
from .generators import FAMILIES, generate
from .graph import Graph, GraphFormatError, build_family, degeneracy_ordering, load_graph, write_graph

class InputError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--input", "-i", default="-", help="graph file, or - for stdin (default)")
    g.add_argument("--format", "-f", choices=("edgelist", "dimacs"), default="edgelist")
    g.add_argument("--count", action="store_true", help="print counts only")
    g.add_argument("--output", "-o", default="-", help="output file, or - for stdout (default)")
    g.add_argument("--seed", type=int, default=0, help="seed for graph generators")
    g.add_argument("--threads", type=int, default=1, help="worker threads for parallel-eligible work")
    g.add_argument("--oracle", action="store_true", help="answer with the brute-force oracle (small inputs)")
    g.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="kdegen", description="Clique and biclique algorithms for k-degenerate graphs.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help, description=help)

    add("degeneracy", "print the degeneracy k and a degeneracy ordering")
    add("maximal-cliques", "list every maximal clique, one per line in degeneracy order")
    p = add("cliques", "list every clique of a fixed size")
    p.add_argument("--size", "-l", type=int, required=True, dest="size")
    add("triangles", "list every triangle")
    add("remove-triangles", "write the graph with every triangle edge deleted")
    add("maximal-bicliques", "list every maximal biclique as 'A | B'")
    p = add("biclique", "decide whether an (r,l)-biclique exists")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--induced", action="store_true", help="both sides must be independent sets")
    add("vertex-cover", "approximate minimum vertex cover (ratio 2 - 1/k)")
    p = add("max-clique", "maximum clique through the forward-neighbourhood decomposition")
    p.add_argument("--solver", choices=sorted(approx.SOLVERS), default="exact")
    p = add("generate", "write a generated graph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--parts", help="part sizes for complete-multipartite, e.g. 3x3 or 2,3,4")
    p.add_argument("--p", type=float, help="edge probability for gnp")
    p = add("bench", "time operations on generated graphs; CSV on stdout")
    p.add_argument("--family", choices=FAMILIES, default="random-k-degenerate")
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--p", type=float)
    p.add_argument("--ops", default="maximal-cliques", help=f"comma-separated subset of {','.join(BENCH_OPS)}")
    p.add_argument("--plot", metavar="PATH", help="also render a timing figure to PATH")
    return parser


@contextmanager
def _open_out(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _read_graph(args: argparse.Namespace) -> Graph:
    try:
        if args.input == "-":
            return load_graph(sys.stdin, args.format)
        with open(args.input, "rb") as fh:
            return load_graph(fh, args.format)
    except (OSError, GraphFormatError, UnicodeDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _line(vs) -> str:
    return " ".join(map(str, vs))


def _run(args: argparse.Namespace, parser: argparse.ArgumentParser, out: IO[str]) -> None:
    cmd = args.command
    if cmd == "generate":
        try:
            g = generate(args.family, n=args.n, k=args.k, parts=args.parts, p=args.p, seed=args.seed)
        except ValueError as exc:
            parser.error(str(exc))
        write_graph(g, out, args.format)
        return
    if cmd == "bench":
        try:
            sizes = [int(s) for s in args.sizes.split(",")]
            rows = run_bench(args.family, sizes, args.ops.split(","), k=args.k, p=args.p, seed=args.seed, threads=args.threads)
        except ValueError as exc:
            parser.error(str(exc))
        write_csv(rows, out)
        if args.plot:
            from .plotting import plot_bench

            plot_bench(rows, args.plot, title=f"{args.family}, k={args.k}")
        return

    g = _read_graph(args)
    if args.oracle and g.n > oracle.SUBSET_LIMIT:
        parser.error(f"--oracle is limited to n <= {oracle.SUBSET_LIMIT}")

    if cmd == "degeneracy":
        if args.oracle:
            out.write(f"k={oracle.oracle_degeneracy(g)}\n")
            return
        ordering = degeneracy_ordering(g)
        out.write(f"k={ordering.k}\n")
        if not args.count:
            out.write(_line(ordering.order) + "\n")
    elif cmd == "maximal-cliques":
        if args.oracle:
            found = sorted(sorted(c) for c in oracle.oracle_maximal_cliques(g))
        else:
            found = cliques.iter_maximal_cliques(g, threads=args.threads)
        with cliques.gc_paused():
            _emit(out, found, args.count)
    elif cmd == "cliques":
        if args.size < 1 or (args.size < 3 and not args.count):
            parser.error("--size must be >= 3 when listing (>= 1 with --count)")
        if args.oracle:
            _emit(out, sorted(sorted(c) for c in oracle.oracle_l_cliques(g, args.size)), args.count)
        elif args.count:
            out.write(f"{fixed.count_l_cliques(g, args.size)}\n")
        else:
            _emit(out, fixed.list_l_cliques(g, args.size), False)
    elif cmd == "triangles":
        found = sorted(sorted(t) for t in oracle.oracle_triangles(g)) if args.oracle else fixed.list_triangles(g)
        _emit(out, found, args.count)
    elif cmd == "remove-triangles":
        write_graph(fixed.remove_triangles(g), out, args.format)
    elif cmd == "maximal-bicliques":
        if args.oracle:
            found = [biclique.Biclique(a, b) for a, b in sorted(oracle.oracle_maximal_bicliques(g))]
        else:
            found = biclique.list_maximal_bicliques(g)
        if args.count:
            out.write(f"{len(found)}\n")
        else:
            for b in found:
                out.write(f"{b}\n")
    elif cmd == "biclique":
        if args.r < 1 or args.l < 1:
            parser.error("--r and --l must be positive")
        if args.oracle:
            yes = oracle.oracle_rl_biclique(g, args.r, args.l, args.induced)
            out.write("YES\n" if yes else "NO\n")
            return
        solve = biclique.solve_induced_rl_biclique if args.induced else biclique.solve_rl_biclique
        w = solve(g, args.r, args.l)
        if w is None:
            out.write("NO\n")
        else:
            out.write(f"YES\n{_line(sorted(w.a))} | {_line(sorted(w.b))}\n")
    elif cmd == "vertex-cover":
        if args.oracle:
            cover = sorted(oracle.oracle_min_vertex_cover(g))
            out.write(f"size={len(cover)}\n")
            if not args.count:
                out.write(_line(cover) + "\n")
            return
        res = approx.vertex_cover_approx(g)
        out.write(f"size={res.size}\n")
        if not args.count:
            out.write(f"lp_lower_bound={res.lp_lower_bound}\n")
            out.write(_line(res.cover) + "\n")
    elif cmd == "max-clique":
        if args.oracle:
            best = sorted(oracle.oracle_max_clique(g))
        else:
            best = approx.max_clique_approx(g, approx.SOLVERS[args.solver], build_family(g))
        out.write(f"size={len(best)}\n")
        if not args.count:
            out.write(_line(best) + "\n")


def _emit(out: IO[str], items, count: bool) -> None:
    if count:
        out.write(f"{sum(1 for _ in items)}\n")
    else:
        for c in items:
            out.write(_line(c) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
        if args.threads < 1:
            parser.error("--threads must be at least 1")
        with _open_out(args.output) as out:
            _run(args, parser, out)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except oracle.OracleSizeError as exc:
        print(f"kdegen: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"kdegen: input error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"kdegen: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
