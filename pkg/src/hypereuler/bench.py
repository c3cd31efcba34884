"""Benchmark harness comparing solver strategies across an instance corpus.

Runs every requested strategy on every instance, asserts cross-strategy
decision agreement, and renders a tab-separated table plus summary
aggregates and a pair of figures.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Hypergraph
from .errors import DecisionMismatch
from .oracle import Mode
from .solvers import SolverConfig, Strategy, solve

COLUMNS = (
    "instance",
    "mode",
    "strategy",
    "decision",
    "depth",
    "nodes",
    "assignments",
    "fallbacks",
    "seconds",
)


@dataclass(frozen=True)
class BenchRow:
    instance: str
    mode: str
    strategy: str
    decision: bool
    depth: int
    nodes: int
    assignments: int
    fallbacks: int
    seconds: float

    def cells(self) -> Tuple[str, ...]:
        return (
            self.instance,
            self.mode,
            self.strategy,
            "yes" if self.decision else "no",
            str(self.depth),
            str(self.nodes),
            str(self.assignments),
            str(self.fallbacks),
            f"{self.seconds:.6f}",
        )


@dataclass(frozen=True)
class BenchReport:
    rows: Tuple[BenchRow, ...]

    def summary(self) -> Dict[str, Dict[str, float]]:
        """Per-strategy aggregates: instance count, yes count, totals."""
        agg: Dict[str, Dict[str, float]] = {}
        for r in self.rows:
            a = agg.setdefault(
                r.strategy, {"runs": 0, "yes": 0, "fallbacks": 0, "seconds": 0.0}
            )
            a["runs"] += 1
            a["yes"] += int(r.decision)
            a["fallbacks"] += r.fallbacks
            a["seconds"] += r.seconds
        return agg


def run_bench(
    instances: Sequence[Tuple[str, Hypergraph]],
    strategies: Sequence[Strategy],
    modes: Sequence[Mode] = (Mode.FAMILY, Mode.TOUR),
    base_config: Optional[SolverConfig] = None,
) -> BenchReport:
    base = base_config or SolverConfig()
    rows: List[BenchRow] = []
    for name, h in instances:
        for mode in modes:
            decisions = {}
            for strat in strategies:
                cfg = SolverConfig(
                    strategy=strat,
                    cut_choice=base.cut_choice,
                    parallel=base.parallel,
                    seed=base.seed,
                    oracle_size_budget=base.oracle_size_budget,
                )
                out = solve(h, mode, cfg)
                decisions[strat.value] = out.decision
                rows.append(
                    BenchRow(
                        instance=name,
                        mode=mode.value,
                        strategy=strat.value,
                        decision=out.decision,
                        depth=out.stats.max_depth,
                        nodes=out.stats.nodes,
                        assignments=out.stats.assignments,
                        fallbacks=out.stats.oracle_fallbacks,
                        seconds=out.stats.elapsed,
                    )
                )
            if len(set(decisions.values())) > 1:
                raise DecisionMismatch(
                    f"strategies disagree on {name} ({mode.value}): {decisions}"
                )
    return BenchReport(tuple(rows))


def format_report(report: BenchReport) -> str:
    lines = ["\t".join(COLUMNS)]
    lines += ["\t".join(r.cells()) for r in report.rows]
    for strat, a in sorted(report.summary().items()):
        lines.append(
            f"# {strat}: runs={int(a['runs'])} yes={int(a['yes'])} "
            f"fallbacks={int(a['fallbacks'])} seconds={a['seconds']:.6f}"
        )
    return "\n".join(lines) + "\n"


def render_figures(report: BenchReport, out_path: str) -> List[str]:
    """Write comparison figures next to the table file; returns their paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    stem, _ = os.path.splitext(out_path)
    summary = report.summary()
    strategies = sorted(summary)
    written: List[str] = []

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(strategies, [summary[s]["seconds"] for s in strategies], color="#4878a8")
    ax.set_ylabel("total wall time (s)")
    ax.set_title("Solver strategy runtime")
    path = f"{stem}_times.png"
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(strategies, [summary[s]["fallbacks"] for s in strategies], color="#a85448")
    ax.set_ylabel("oracle fallbacks")
    ax.set_title("Oracle fallback counts")
    path = f"{stem}_fallbacks.png"
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    written.append(path)
    return written


def write_report(report: BenchReport, out_path: str, figures: bool = True) -> List[str]:
    with open(out_path, "w") as fh:
        fh.write(format_report(report))
    paths = [out_path]
    if figures:
        paths += render_figures(report, out_path)
    return paths
