"""
Induced Matching Workbench
Solve subcubic instances, inspect the branching-factor table, run small benchmarks
"""

import streamlit as st
import logging
import math
import sys
import os
from datetime import datetime

import numpy as np
import pandas as pd

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from src.config import config
from src.experiments.bench import fit_growth_slope, run_bench, to_frame
from src.experiments.report import table_frame
from src.graphs.dimacs import GraphFormatError, format_graph, format_matching, parse_graph
from src.graphs.generator import random_subcubic
from src.measure.table import overall_max, s_grid, theorem_table
from src.models.results import SolverConfig
from src.solvers.branch_and_reduce import AlgoMIMSolver
from src.solvers.baseline import CameronSolver
from src.solvers.oracle import OracleGuardError, brute_force_mim

logging.basicConfig(level=config.LOG_LEVEL)
logger = logging.getLogger(__name__)

st.set_page_config(
    page_title="Induced Matching Workbench",
    layout="wide",
    initial_sidebar_state="expanded"
)

EXAMPLE_GRAPHS = {
    "Petersen graph": "p edge 10 15\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\ne 1 6\ne 2 7\ne 3 8\ne 4 9\ne 5 10\n"
                      "e 6 8\ne 8 10\ne 7 10\ne 7 9\ne 6 9\n",
    "Path with 4 edges": "p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n",
    "K4": "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
}


def init_session_state():
    """Initialize session state variables"""
    if 'graph_text' not in st.session_state:
        st.session_state.graph_text = EXAMPLE_GRAPHS["Petersen graph"]
    if 'solve_history' not in st.session_state:
        st.session_state.solve_history = []
    if 'bench_records' not in st.session_state:
        st.session_state.bench_records = None


def sidebar_settings() -> SolverConfig:
    with st.sidebar:
        st.markdown("## Solver settings")
        kappa = st.number_input("kappa (bisect above this many degree-3 nodes)", min_value=3,
                                value=config.KAPPA, step=1)
        seed = st.number_input("bisection seed", value=config.SEED, step=1)
        s = st.slider("measure weight s", 0.5, 1.0, float(config.WEIGHT_S), 0.001)

        st.divider()
        st.markdown("### Examples")
        for name, text in EXAMPLE_GRAPHS.items():
            if st.button(name, key=f"ex_{name}", use_container_width=True):
                st.session_state.graph_text = text
                st.rerun()

        if st.session_state.solve_history:
            st.divider()
            st.markdown("### Recent solves")
            for entry in st.session_state.solve_history[-5:]:
                st.caption(f"{entry['when']}: n={entry['n']} m={entry['m']} size {entry['size']}")
    return SolverConfig(s=s, kappa=int(kappa), seed=int(seed))


def solve_tab(cfg: SolverConfig):
    col1, col2 = st.columns([2, 1])
    with col2:
        st.markdown("#### Generate")
        n = st.number_input("n", min_value=1, max_value=200, value=16)
        p3 = st.slider("degree-3 fraction", 0.0, 1.0, 0.75, 0.05)
        gen_seed = st.number_input("generator seed", value=1, step=1)
        if st.button("Generate graph"):
            st.session_state.graph_text = format_graph(random_subcubic(int(n), p3, int(gen_seed)))
            st.rerun()
    with col1:
        text = st.text_area("Graph (c / p edge n m / e u v lines)", st.session_state.graph_text, height=260)
        cross_check = st.checkbox("Cross-check with oracle and baseline", value=True)

    if not st.button("Solve", type="primary"):
        return
    try:
        g = parse_graph(text)
    except GraphFormatError as e:
        st.error(f"Could not read the graph: {e}")
        return

    with st.spinner("Searching..."):
        solver = AlgoMIMSolver(cfg)
        result = solver.solve(g)
    stats = solver.stats
    st.session_state.solve_history.append({
        'when': datetime.now().strftime("%H:%M:%S"), 'n': g.n, 'm': g.m, 'size': len(result)
    })

    c1, c2, c3, c4 = st.columns(4)
    c1.metric("Matching size", len(result))
    c2.metric("Leaves", stats.leaves)
    c3.metric("Bisections", stats.bisections)
    c4.metric("1.2630^measure", f"{stats.measure_bound:.1f}")
    st.code(format_matching(result), language="text")

    with st.expander("Rule counts"):
        st.dataframe(pd.DataFrame(sorted(stats.rule_counts.items()), columns=["rule", "count"]),
                     hide_index=True)

    if cross_check:
        baseline = CameronSolver().solve(g)
        st.write(f"**Baseline (independent set on L(G²)):** {len(baseline)}")
        try:
            st.write(f"**Oracle:** {brute_force_mim(g).size}")
        except OracleGuardError as e:
            st.info(str(e))


def factors_tab():
    s_text = st.text_input("Weights s", "0.6, 0.636, 0.7")
    try:
        s_values = [float(x) for x in s_text.split(",") if x.strip()]
    except ValueError:
        st.error("Weights must be numbers")
        return
    rows = theorem_table(s_values)
    st.dataframe(table_frame(rows, s_values), hide_index=True, use_container_width=True)

    flagged = [(row, s) for row in rows for s in row.mismatches]
    for row, s in flagged:
        st.warning(f"{row.formula} at s={s:g}: printed {row.printed[s]:g}, computed {row.values[s]:.4f}")

    st.markdown("#### Overall factor across s")
    grid = s_grid(0.01)
    curve = pd.DataFrame({"s": grid, "overall": [overall_max(float(s)) for s in grid]}).set_index("s")
    st.line_chart(curve)


def bench_tab(cfg: SolverConfig):
    sizes_text = st.text_input("Sizes", "10, 14, 18, 22")
    trials = st.number_input("Trials per size", min_value=1, max_value=20, value=3)
    if st.button("Run benchmark"):
        sizes = [int(x) for x in sizes_text.split(",") if x.strip()]
        with st.spinner("Running..."):
            st.session_state.bench_records = run_bench(sizes, int(trials), seed=cfg.seed, cfg=cfg)

    records = st.session_state.bench_records
    if not records:
        return
    frame = to_frame(records)
    st.dataframe(frame, hide_index=True, use_container_width=True)

    slope = fit_growth_slope(records)
    if slope is not None:
        st.write(f"**Fitted slope of ln(leaves):** {slope:.4f} "
                 f"(reference ln 1.2630 = {math.log(config.GROWTH_BASE):.4f})")
        points = frame[frame["leaves"].notna()]
        st.scatter_chart(pd.DataFrame({"n": points["n"], "ln_leaves": np.log(points["leaves"].astype(float))}),
                         x="n", y="ln_leaves")


def main():
    """Main application function"""
    init_session_state()
    try:
        config.validate()
    except ValueError as e:
        st.error(f"⚠️ Configuration error: {e}")
        return
    cfg = sidebar_settings()

    st.title("Induced Matching Workbench")
    solve, factors, bench = st.tabs(["Solve", "Branching factors", "Benchmark"])
    with solve:
        solve_tab(cfg)
    with factors:
        factors_tab()
    with bench:
        bench_tab(cfg)


if __name__ == "__main__":
    main()
