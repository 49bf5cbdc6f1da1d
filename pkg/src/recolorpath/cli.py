"""Command-line surface: solve, verify, gen, and bench.

Exit codes: 0 = YES / success, 1 = NO / invalid, 2 = error or exhausted
budget, so shell pipelines can branch on verdicts.
"""

import argparse
import json
import signal
import sys
import time
from pathlib import Path

from .files import (
    ParseError,
    parse_graph,
    parse_instance,
    parse_sequence,
    serialize_instance,
    serialize_sequence,
)
from .gadgets import (
    GadgetError,
    bk_sequence,
    build_bk,
    build_forbidding_path,
    np_reduce,
    np_witness,
    path_colorings,
    w1_reduce,
    w1_witness,
)
from .graph import GraphError, Instance, verify_sequence
from .oracle import DEFAULT_NODE_CAP, SearchBudgetExceeded, oracle_distance
from .solver_fpt import FptStats, list_recolor, recolor
from .solver_xp import XpStats, solve_xp

ALGOS = ("oracle", "xp", "fpt")


class _Timeout(Exception):
    pass


class _time_limit:
    """SIGALRM-based wall-clock limit; seconds=None disables it."""

    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        if self.seconds is not None:
            self.previous = signal.signal(signal.SIGALRM, self._raise)
            signal.setitimer(signal.ITIMER_REAL, self.seconds)
        return self

    def __exit__(self, *exc):
        if self.seconds is not None:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, self.previous)
        return False

    @staticmethod
    def _raise(signum, frame):
        raise _Timeout()


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _run_algo(instance: Instance, algo: str, args) -> tuple[bool, list | None, int]:
    """Returns (yes, witness_or_None, solver counter)."""
    graph = instance.graph
    k_or_lists = instance.lists if instance.lists is not None else instance.k
    node_cap = args.node_cap if args.node_cap is not None else DEFAULT_NODE_CAP
    if algo == "oracle":
        result = oracle_distance(
            graph, k_or_lists, instance.alpha, instance.beta, node_cap=node_cap
        )
        yes = result.distance is not None and result.distance <= instance.ell
        return yes, result.witness if yes else None, result.explored
    if algo == "xp":
        stats = XpStats()
        seq = solve_xp(
            graph,
            k_or_lists,
            instance.alpha,
            instance.beta,
            instance.ell,
            prune_revisits=getattr(args, "prune", False),
            node_cap=args.node_cap,
            stats=stats,
        )
        return seq is not None, seq, stats.generated
    if algo == "fpt":
        stats = FptStats()
        if instance.lists is None:
            seq = recolor(
                graph,
                instance.k,
                instance.ell,
                instance.alpha,
                instance.beta,
                guess_cap=getattr(args, "guess_cap", None),
                stats=stats,
            )
            return seq is not None, seq, stats.recurse_calls
        seq = list_recolor(
            graph, instance.lists, instance.alpha, instance.beta, instance.ell,
            stats=stats,
        )
        return seq is not None, seq, stats.list_nodes
    raise ValueError(f"unknown algorithm {algo!r}")


def cmd_solve(args) -> int:
    try:
        instance = parse_instance(Path(args.instance).read_text())
        yes, witness, _ = _run_algo(instance, args.algo, args)
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 2
    print("YES" if yes else "NO")
    if yes and args.witness and witness is not None:
        sys.stdout.write(serialize_sequence(witness))
    return 0 if yes else 1


def cmd_verify(args) -> int:
    try:
        instance = parse_instance(Path(args.instance).read_text())
        steps = parse_sequence(Path(args.sequence).read_text())
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    k_or_lists = instance.lists if instance.lists is not None else instance.k
    verdict = verify_sequence(
        instance.graph, k_or_lists, instance.alpha, instance.beta, instance.ell, steps
    )
    if verdict.ok:
        print("VALID")
        return 0
    where = f" at step {verdict.step_index + 1}" if verdict.step_index is not None else ""
    print(f"INVALID{where}: {verdict.reason}")
    return 1


def _csv_ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise GadgetError(f"{what} must be a comma-separated list of integers") from None


def cmd_gen(args) -> int:
    try:
        witness = None
        if args.kind == "bk":
            bk = build_bk(args.k)
            colors = args.colors if args.colors is not None else max(2 * args.k - 1, 1)
            ell = args.ell if args.ell is not None else 2 * args.k * args.k
            roles = {
                v: f"b:{bk.row_of(v)}-{bk.col_of(v)}" for v in range(bk.graph.n)
            }
            instance = Instance(
                graph=bk.graph, k=colors, ell=ell,
                alpha=bk.alpha, beta=bk.beta, roles=roles,
            )
            header = f"gen bk k={args.k} colors={colors} ell={ell}"
            if args.witness_out:
                witness = bk_sequence(args.k)
        elif args.kind == "forbid":
            fp = build_forbidding_path(
                _csv_ints(args.lu, "--lu"), _csv_ints(args.lv, "--lv"), args.a, args.b
            )
            colorings = path_colorings(fp)
            if not colorings:
                raise GadgetError("the path admits no list coloring; nothing to generate")
            roles = {0: "u", 6: "v"}
            roles.update({i: f"internal:{i}" for i in range(1, 6)})
            instance = Instance(
                graph=fp.graph, k=4, ell=6,
                alpha=colorings[0], beta=colorings[-1],
                lists=fp.lists, roles=roles,
            )
            header = f"gen forbid lu={args.lu} lv={args.lv} a={args.a} b={args.b}"
        elif args.kind == "np":
            source = parse_graph(Path(args.graph).read_text())
            built = np_reduce(source)
            instance = built.instance
            header = f"gen np source-n={source.n} source-m={source.m}"
            if args.witness_out:
                if not args.three_coloring:
                    raise GadgetError("--witness-out requires --three-coloring")
                witness = np_witness(built, _csv_ints(args.three_coloring, "--three-coloring"))
        elif args.kind == "w1":
            source = parse_graph(Path(args.graph).read_text())
            built = w1_reduce(source, args.t)
            instance = built.instance
            header = f"gen w1 t={args.t} source-n={source.n} source-m={source.m}"
            if args.witness_out:
                if args.independent_set is None:
                    raise GadgetError("--witness-out requires --independent-set")
                chosen = [v - 1 for v in _csv_ints(args.independent_set, "--independent-set")]
                witness = w1_witness(built, chosen)
        else:
            raise GadgetError(f"unknown generator {args.kind!r}")
        instance.validate()
    except (ParseError, GraphError, GadgetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_output(serialize_instance(instance, comments=[header]), args.out)
    if args.witness_out and witness is not None:
        _write_output(serialize_sequence(witness, comments=[header]), args.witness_out)
    return 0


def cmd_bench(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        print(f"error: {directory} is not a directory", file=sys.stderr)
        return 2
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for algo in algos:
        if algo not in ALGOS:
            print(f"error: unknown algorithm {algo!r}", file=sys.stderr)
            return 2
    rows = []
    disagreement = False
    for path in sorted(p for p in directory.iterdir() if p.is_file()):
        row: dict = {"instance": path.name, "results": {}}
        try:
            instance = parse_instance(path.read_text())
        except (ParseError, GraphError) as exc:
            row["error"] = str(exc)
            rows.append(row)
            continue
        for algo in algos:
            start = time.perf_counter()
            counter: int | None = None
            try:
                with _time_limit(args.time_limit):
                    yes, _, counter = _run_algo(instance, algo, args)
                verdict = "YES" if yes else "NO"
            except _Timeout:
                verdict = "TIMEOUT"
            except SearchBudgetExceeded:
                verdict = "BUDGET"
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            row["results"][algo] = {
                "verdict": verdict,
                "time_ms": round(elapsed_ms, 3),
                "counter": counter,
            }
        decided = {r["verdict"] for r in row["results"].values() if r["verdict"] in ("YES", "NO")}
        if len(decided) > 1:
            row["disagreement"] = True
            disagreement = True
        rows.append(row)

    name_width = max([len(r["instance"]) for r in rows], default=8)
    header_cells = [f"{'instance':<{name_width}}"] + [f"{a:>24}" for a in algos]
    print("  ".join(header_cells))
    for row in rows:
        if "error" in row:
            print(f"{row['instance']:<{name_width}}  parse error: {row['error']}")
            continue
        cells = [f"{row['instance']:<{name_width}}"]
        for algo in algos:
            result = row["results"][algo]
            counter = result["counter"] if result["counter"] is not None else "-"
            cells.append(f"{result['verdict']:>8} {result['time_ms']:>9.1f}ms {counter:>6}")
        line = "  ".join(cells)
        if row.get("disagreement"):
            line += "  << DISAGREEMENT"
        print(line)
    if args.json:
        Path(args.json).write_text(json.dumps(rows, indent=2) + "\n")
    return 1 if disagreement else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recolorpath",
        description="Exact solvers and gadget generators for bounded-length graph recoloring",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide an instance and optionally emit a witness")
    solve.add_argument("instance", help="instance file")
    solve.add_argument("--algo", choices=ALGOS, default="fpt")
    solve.add_argument("--witness", action="store_true", help="print the sequence on YES")
    solve.add_argument("--node-cap", type=int, default=None,
                       help="state cap for oracle/xp (default 10^7 for the oracle)")
    solve.add_argument("--prune", action="store_true",
                       help="xp only: skip colorings already expanded at the same depth")
    solve.add_argument("--guess-cap", type=int, default=None,
                       help="fpt only: cap on guessed used-color set sizes "
                            "(default ell+1; ell reproduces the known-bad tight cap)")
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="check a sequence file against an instance")
    verify.add_argument("instance")
    verify.add_argument("sequence")
    verify.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="generate gadget instances")
    gen_sub = gen.add_subparsers(dest="kind", required=True)

    gen_bk = gen_sub.add_parser("bk", help="row-vs-column interchange instance")
    gen_bk.add_argument("--k", type=int, required=True)
    gen_bk.add_argument("--colors", type=int, default=None, help="palette size (default 2k-1)")
    gen_bk.add_argument("--ell", type=int, default=None, help="budget (default 2k^2)")

    gen_forbid = gen_sub.add_parser("forbid", help="single forbidding-path instance")
    gen_forbid.add_argument("--lu", required=True, help="endpoint u list, e.g. 1,2,3")
    gen_forbid.add_argument("--lv", required=True, help="endpoint v list, e.g. 2,3,4")
    gen_forbid.add_argument("--a", type=int, required=True)
    gen_forbid.add_argument("--b", type=int, required=True)

    gen_np = gen_sub.add_parser("np", help="3-colorability reduction instance")
    gen_np.add_argument("graph", help="source graph file (p edge format)")
    gen_np.add_argument("--three-coloring", default=None,
                        help="proper 3-coloring of the source, e.g. 1,2,3 (for the witness)")

    gen_w1 = gen_sub.add_parser("w1", help="independent-set reduction instance")
    gen_w1.add_argument("graph", help="source graph file (p edge format)")
    gen_w1.add_argument("--t", type=int, required=True)
    gen_w1.add_argument("--independent-set", default=None,
                        help="t-1 independent source vertices, 1-indexed (for the witness)")

    for p in (gen_bk, gen_forbid, gen_np, gen_w1):
        p.add_argument("-o", "--out", default=None, help="instance output path (default stdout)")
        p.add_argument("--witness-out", default=None, help="also write a witness sequence here")
        p.set_defaults(func=cmd_gen)

    bench = sub.add_parser("bench", help="run solvers over a directory of instances")
    bench.add_argument("directory")
    bench.add_argument("--algos", default="oracle,xp,fpt")
    bench.add_argument("--time-limit", type=float, default=None, help="seconds per run")
    bench.add_argument("--node-cap", type=int, default=None)
    bench.add_argument("--json", default=None, help="also write machine-readable rows here")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
