"""Run every applicable counting method on one query and compare them.

Used by the CLI bench subcommand.  The report path writes the per-method
numbers as CSV and renders a timing figure next to it.
"""

from __future__ import annotations

import csv
import os
import time
from dataclasses import dataclass, field

from .core import PrimarySpec, Tally, as_primary_spec
from .oracle import BudgetExceededError, EnumBudget, count_perms_brute, count_subs_brute
from .pascal import count_subs_dp
from .perm import count_perms_dp, count_perms_general
from .subcount import count_subs_composition, count_subs_general


@dataclass
class MethodRun:
    kind: str
    method: str
    result: int | None
    elapsed_ms: float
    ops: int
    lambda_solutions: int | None = None
    error: str | None = None


@dataclass
class BenchReport:
    spec: PrimarySpec
    m: int
    runs: list[MethodRun] = field(default_factory=list)

    def kind_agrees(self, kind: str) -> bool:
        results = {run.result for run in self.runs if run.kind == kind and run.error is None}
        return len(results) <= 1

    @property
    def methods_agree(self) -> bool:
        return self.kind_agrees("subs") and self.kind_agrees("perms")


_SUBS_METHODS = ("formula", "dp", "composition", "oracle")
_PERMS_METHODS = ("formula", "table", "oracle")


def _timed(kind: str, method: str, fn) -> MethodRun:
    tally = Tally()
    start = time.perf_counter()
    try:
        result = fn(tally)
    except BudgetExceededError as exc:
        elapsed = (time.perf_counter() - start) * 1000.0
        return MethodRun(kind, method, None, elapsed, tally.ops, None, str(exc))
    elapsed = (time.perf_counter() - start) * 1000.0
    solutions = tally.solutions if method == "formula" else None
    return MethodRun(kind, method, result, elapsed, tally.ops, solutions)


def run_bench(spec, m: int, budget: EnumBudget | None = None) -> BenchReport:
    """Time every subs and perms method on (spec, m).

    An oracle run that blows its budget is reported with an error instead
    of failing the whole bench.
    """
    spec = as_primary_spec(spec)
    report = BenchReport(spec=spec, m=m)
    subs = {
        "formula": lambda t: count_subs_general(spec, m, tally=t),
        "dp": lambda t: count_subs_dp(spec, m, tally=t),
        "composition": lambda t: count_subs_composition(spec, m, tally=t),
        "oracle": lambda t: count_subs_brute(spec, m, budget, tally=t),
    }
    perms = {
        "formula": lambda t: count_perms_general(spec, m, tally=t),
        "table": lambda t: count_perms_dp(spec, m, tally=t),
        "oracle": lambda t: count_perms_brute(spec, m, budget, tally=t),
    }
    for method in _SUBS_METHODS:
        report.runs.append(_timed("subs", method, subs[method]))
    for method in _PERMS_METHODS:
        report.runs.append(_timed("perms", method, perms[method]))
    return report


def write_report(report: BenchReport, out_dir: str) -> tuple[str, str]:
    """Write bench.csv and bench.png under out_dir; returns both paths."""
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "bench.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["kind", "method", "result", "elapsed_ms", "ops", "lambda_solutions", "error"]
        )
        for run in report.runs:
            writer.writerow([
                run.kind,
                run.method,
                "" if run.result is None else str(run.result),
                f"{run.elapsed_ms:.3f}",
                run.ops,
                "" if run.lambda_solutions is None else run.lambda_solutions,
                run.error or "",
            ])

    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    for ax, kind in zip(axes, ("subs", "perms")):
        runs = [r for r in report.runs if r.kind == kind and r.error is None]
        names = [r.method for r in runs]
        times = [r.elapsed_ms for r in runs]
        ax.barh(names, times)
        ax.invert_yaxis()
        ax.set_xlabel("elapsed ms")
        ax.set_title(f"{kind}, m={report.m}")
        for y, run in enumerate(runs):
            ax.annotate(f"{run.ops} ops", (run.elapsed_ms, y), fontsize=8,
                        xytext=(2, 0), textcoords="offset points", va="center")
    fig.suptitle(f"spec {','.join(map(str, report.spec.k))}")
    fig.tight_layout()
    png_path = os.path.join(out_dir, "bench.png")
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return csv_path, png_path
