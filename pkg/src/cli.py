"""
Command-line front end
Results go to stdout, diagnostics to stderr; exit status 1 on any handled error
"""

import argparse
import json
import logging
import math
import sys
from typing import List, Optional

from .bisection.cut import compute_cut, cut_from_sides
from .config import config
from .experiments.bench import fit_growth_slope, growth_within_bound, run_bench, to_frame
from .experiments.report import emit_table
from .graphs.dimacs import format_graph, format_matching, format_sides, parse_sides, read_graph
from .graphs.generator import random_subcubic
from .measure.table import optimize_s
from .measure.tau import tau, upround
from .models.results import SolverConfig
from .rules.branching import match_branching
from .rules.simplification import find_simplification
from .rules.state import SolverState
from .solvers.branch_and_reduce import AlgoMIMSolver
from .solvers.baseline import CameronSolver, build_l_g2
from .solvers.oracle import brute_force_mim

logger = logging.getLogger(__name__)


def _float_list(text: str) -> List[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _int_list(text: str) -> List[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _solver_config(args) -> SolverConfig:
    return SolverConfig(
        s=args.s, kappa=args.kappa, seed=args.seed,
        assertion_level=args.assertion_level, bisection_starts=args.starts,
    )


def cmd_solve(args) -> int:
    g = read_graph(args.file)
    solver = AlgoMIMSolver(_solver_config(args))
    result = solver.solve(g)
    stats = solver.stats

    if args.json:
        payload = {"size": len(result), "edges": sorted(result), "stats": stats.model_dump()}
        print(json.dumps(payload, indent=2))
        return 0
    sys.stdout.write(format_matching(result))
    if args.stats:
        for key, value in stats.model_dump().items():
            print(f"# {key} {value}")
    return 0


def cmd_oracle(args) -> int:
    g = read_graph(args.file)
    found = brute_force_mim(g, args.max_edges)
    sys.stdout.write(format_matching(found.witness))
    print(f"# explored {found.explored}")
    return 0


def cmd_baseline(args) -> int:
    g = read_graph(args.file)
    solver = CameronSolver()
    result, elapsed = solver.run(g)
    sys.stdout.write(format_matching(result))
    if args.stats:
        print(f"# reduced_nodes {g.m}")
        print(f"# reduced_max_degree {build_l_g2(g).max_degree}")
        print(f"# explored {solver.search.explored}")
        print(f"# elapsed {elapsed:.6f}")
    return 0


def cmd_bisect(args) -> int:
    g = read_graph(args.file)
    cut = compute_cut(g, seed=args.seed, starts=args.starts)
    print(f"side sizes {len(cut.side_nodes(1))} {len(cut.side_nodes(2))}")
    print(f"degree3 {cut.degree3_per_side[0]} {cut.degree3_per_side[1]} (k={cut.k})")
    print(f"cut {cut.size} (contracted {cut.contracted_cut_size}, ratio {cut.quality:.3f})")
    for u, v in sorted(cut.B):
        print(f"b {u} {v}")
    if args.sides:
        sys.stdout.write(format_sides(cut.side))
    return 0


def cmd_rules(args) -> int:
    g = read_graph(args.file)
    state = SolverState.initial(g)
    if args.cut:
        with open(args.cut, 'r', encoding='utf-8') as handle:
            cut = cut_from_sides(g, parse_sides(handle.read()))
        state = state.with_cut(cut.side, cut.B)
    elif g.is_connected() and g.degree3_count() >= 2:
        cut = compute_cut(g, seed=args.seed)
        state = state.with_cut(cut.side, cut.B)

    print(f"B = {state.sorted_B()}")
    match = find_simplification(state, args.kappa)
    if match is None and state.B:
        match = match_branching(state)
    if match is None:
        print("no rule applies")
    else:
        print(match.describe())
    return 0


def cmd_tau(args) -> int:
    beta = tau(args.values)
    print(f"tau {beta:.10f}")
    print(f"uprounded {upround(beta):.4f}")
    return 0


def cmd_table(args) -> int:
    s_values = _float_list(args.s) if args.s else None
    sys.stdout.write(emit_table(s_values, csv=args.csv, supplementary=args.supplementary).rstrip("\n") + "\n")
    if args.optimize:
        best_s, best = optimize_s(args.optimize)
        print(f"best s {best_s:g} overall {upround(best):.4f}")
    return 0


def cmd_gen(args) -> int:
    g = random_subcubic(args.n, args.p3, args.seed)
    text = format_graph(g, comments=[f"random subcubic n={args.n} p3={args.p3} seed={args.seed}"])
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    cfg = SolverConfig(kappa=args.kappa, seed=args.seed, assertion_level=args.assertion_level)
    records = run_bench(
        _int_list(args.sizes), args.trials, seed=args.seed, csv_path=args.csv, p3=args.p3, cfg=cfg,
        with_oracle=not args.no_oracle, with_baseline=args.baseline, n_jobs=args.jobs,
    )
    if not args.csv:
        sys.stdout.write(to_frame(records).to_csv(index=False))

    slope = fit_growth_slope(records)
    failed = [r for r in records if r.error]
    if slope is not None:
        bound = math.log(config.GROWTH_BASE) + config.GROWTH_SLACK
        verdict = "within" if growth_within_bound(slope) else "above"
        print(f"# ln(leaves) slope {slope:.4f} {verdict} {bound:.4f}", file=sys.stderr)
    if failed:
        print(f"# {len(failed)} rows with errors", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mim", description="Maximum induced matching on subcubic graphs")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("--kappa", type=int, default=config.KAPPA)
        p.add_argument("--seed", type=int, default=config.SEED)
        p.add_argument("--s", type=float, default=config.WEIGHT_S)
        p.add_argument("--starts", type=int, default=config.BISECTION_STARTS)
        p.add_argument("--assertion-level", type=int, default=config.ASSERTION_LEVEL)

    p = sub.add_parser("solve", help="exact maximum induced matching")
    p.add_argument("file")
    solver_flags(p)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive search")
    p.add_argument("file")
    p.add_argument("--max-edges", type=int, default=config.ORACLE_MAX_EDGES)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("baseline", help="independent set on L(G^2)")
    p.add_argument("file")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("bisect", help="balanced bisection cut")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=config.SEED)
    p.add_argument("--starts", type=int, default=config.BISECTION_STARTS)
    p.add_argument("--sides", action="store_true", help="also print the side of every node")
    p.set_defaults(func=cmd_bisect)

    p = sub.add_parser("rules", help="first rule matching a state")
    p.add_argument("file")
    p.add_argument("--cut", help="side file with 's <v> <side>' lines")
    p.add_argument("--kappa", type=int, default=config.KAPPA)
    p.add_argument("--seed", type=int, default=config.SEED)
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("tau", help="branching factor of a vector")
    p.add_argument("values", type=float, nargs="+")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("table", help="branching-factor table")
    p.add_argument("--s", help="comma-separated weights, default 0.6,0.636,0.7")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--supplementary", action="store_true")
    p.add_argument("--optimize", type=float, metavar="STEP", help="also scan s over [0.5, 1]")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gen", help="random connected subcubic graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p3", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=config.SEED)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="benchmark CSV")
    p.add_argument("--sizes", default="20,30,40,50,60")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=config.SEED)
    p.add_argument("--p3", type=float, default=0.75)
    p.add_argument("--kappa", type=int, default=config.KAPPA)
    p.add_argument("--assertion-level", type=int, default=config.ASSERTION_LEVEL)
    p.add_argument("--csv")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--baseline", action="store_true")
    p.add_argument("--jobs", type=int, default=config.BENCH_JOBS)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        config.validate()
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
