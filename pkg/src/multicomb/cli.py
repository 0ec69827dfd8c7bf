"""Command-line front end.

Subcommands: spec, count subs|perms, table subs|perms, verify, bench.
Results go to stdout (a bare decimal in plain mode, a JSON envelope with
--json); diagnostics go to stderr.  Exit codes: 0 ok, 1 parse or validation
error, 2 method disagreement or failed verification, 3 oracle budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .bench import run_bench, write_report
from .core import (
    UNBOUNDED,
    Multiset,
    adjoint_spec,
    as_primary_spec,
    check_spec_identities,
    is_self_adjoint,
    multiboolean_cardinality,
    parse_multiset,
    primary_spec,
    secondary_spec,
)
from .lambdas import enumerate_lambda
from .oracle import BudgetExceededError, EnumBudget, count_perms_brute, count_subs_brute
from .pascal import build_subs_table, count_subs_dp
from .perm import build_perm_table, count_perms_dp, count_perms_general
from .subcount import (
    count_subs_composition,
    count_subs_constant,
    count_subs_function,
    count_subs_general,
    count_subs_linear,
    count_subs_step,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; route through the
    # ValueError path instead so validation failures exit 1 uniformly.
    def error(self, message):
        raise ValueError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--clamp", type=int, default=None, metavar="N",
                        help="multiplicity substituted for inf entries")

    parser = _Parser(prog="multicomb",
                     description="Exact submultiset and permutation counts of finite multisets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spec", parents=[common],
                            help="show primary, secondary and adjoint specifications")
    p_spec.add_argument("multiset")
    p_spec.set_defaults(func=_cmd_spec)

    p_count = sub.add_parser("count", help="count m-submultisets or m-permutations")
    kind = p_count.add_subparsers(dest="kind", required=True)

    p_subs = kind.add_parser("subs", parents=[common])
    p_subs.add_argument("multiset")
    p_subs.add_argument("-m", dest="m", type=int, required=True, metavar="M")
    p_subs.add_argument("--method", default="auto",
                        choices=("formula", "dp", "composition", "oracle", "auto"))
    p_subs.add_argument("--class", dest="klass", default=None,
                        choices=("function", "linear", "constant", "step"),
                        help="use the closed form for this multiset class")
    p_subs.add_argument("--list-lambda", action="store_true",
                        help="print the solution vectors the formula sums over")
    p_subs.add_argument("--budget", type=int, default=10 ** 6,
                        help="oracle state budget")
    p_subs.set_defaults(func=_cmd_count)

    p_perms = kind.add_parser("perms", parents=[common])
    p_perms.add_argument("multiset")
    p_perms.add_argument("-m", dest="m", type=int, required=True, metavar="M")
    p_perms.add_argument("--method", default="auto",
                         choices=("formula", "table", "oracle", "auto"))
    p_perms.add_argument("--list-lambda", action="store_true",
                         help="print the solution vectors the formula sums over")
    p_perms.add_argument("--budget", type=int, default=10 ** 6,
                         help="oracle state budget")
    p_perms.set_defaults(func=_cmd_count, klass=None)

    p_table = sub.add_parser("table", help="print the full counting table")
    tkind = p_table.add_subparsers(dest="kind", required=True)
    for name in ("subs", "perms"):
        tp = tkind.add_parser(name, parents=[common])
        tp.add_argument("multiset")
        tp.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="check the specification identities on one multiset")
    p_verify.add_argument("multiset")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", parents=[common],
                             help="time every method on one query")
    p_bench.add_argument("multiset")
    p_bench.add_argument("-m", dest="m", type=int, required=True, metavar="M")
    p_bench.add_argument("--budget", type=int, default=10 ** 6)
    p_bench.add_argument("--report-dir", default=None, metavar="DIR",
                         help="write bench.csv and bench.png here")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    raise SystemExit(run_cli(argv))


def _load_spec(args, m: int | None = None):
    ms = parse_multiset(args.multiset)
    clamp = args.clamp
    if ms.has_unbounded and m is not None:
        if clamp is None:
            clamp = m
        elif clamp < m:
            raise ValueError(f"clamp {clamp} is below m = {m}; counts would be wrong")
    return ms, primary_spec(ms, clamp)


def _input_spec_payload(ms: Multiset, spec) -> dict:
    return {
        "labels": list(ms.labels),
        "multiplicities": ["inf" if v == UNBOUNDED else v for v in ms.multiplicities],
        "primary": list(spec.k),
        "secondary": list(secondary_spec(spec).lam),
        "adjoint": list(adjoint_spec(spec).kbar),
        "self_adjoint": is_self_adjoint(spec),
        "cardinality": spec.size,
    }


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_spec(args) -> int:
    ms, spec = _load_spec(args)
    if args.json:
        _emit({"input_spec": _input_spec_payload(ms, spec)})
        return 0
    sec = secondary_spec(spec)
    adj = adjoint_spec(spec)
    print("primary:", " ".join(map(str, spec.k)))
    print("secondary:", " ".join(map(str, sec.lam)))
    print("adjoint:", " ".join(map(str, adj.kbar)))
    print("self-adjoint:", "yes" if is_self_adjoint(spec) else "no")
    return 0


_SUBS_COUNTERS = {
    "formula": count_subs_general,
    "dp": count_subs_dp,
    "composition": count_subs_composition,
}
_PERMS_COUNTERS = {
    "formula": count_perms_general,
    "table": count_perms_dp,
}


def _class_count(klass: str, spec, m: int) -> int:
    asc = sorted(spec.k)
    n = len(asc)
    if klass == "function":
        return count_subs_function(asc, m)
    if klass == "constant":
        if n == 0:
            raise ValueError("constant class needs at least one element")
        if len(set(asc)) != 1:
            raise ValueError("multiplicities are not all equal")
        return count_subs_constant(asc[0], n, m)
    if klass == "linear":
        if n == 0:
            raise ValueError("linear class needs at least one element")
        if n == 1:
            return count_subs_linear(0, asc[0], 1, m)
        diffs = {b - a for a, b in zip(asc, asc[1:])}
        if len(diffs) != 1:
            raise ValueError("multiplicities are not in arithmetic progression")
        p = diffs.pop()
        q = asc[0] - p
        return count_subs_linear(p, q, n, m)
    if klass == "step":
        l = []
        for v in asc:
            bits = (v + 1).bit_length() - 1
            if 2 ** bits - 1 != v:
                raise ValueError(f"multiplicity {v} is not of the form 2^l - 1")
            l.append(bits)
        return count_subs_step(l, m)
    raise ValueError(f"unknown class {klass!r}")


def _cmd_count(args) -> int:
    if args.m < 0:
        raise ValueError("m must be non-negative")
    ms, spec = _load_spec(args, m=args.m)
    method = args.method
    if args.klass is not None:
        if method != "auto":
            raise ValueError("choose either --method or --class, not both")
        method = f"class-{args.klass}"
        counter = lambda: _class_count(args.klass, spec, args.m)
    else:
        if method == "auto":
            method = "dp" if args.kind == "subs" else "table"
        if method == "oracle":
            budget = EnumBudget(args.budget)
            brute = count_subs_brute if args.kind == "subs" else count_perms_brute
            counter = lambda: brute(spec, args.m, budget)
        else:
            table = _SUBS_COUNTERS if args.kind == "subs" else _PERMS_COUNTERS
            counter = lambda: table[method](spec, args.m)

    solutions = None
    if args.list_lambda:
        solutions = [list(sol.lam) for sol in enumerate_lambda(args.m, adjoint_spec(spec))]

    start = time.perf_counter()
    result = counter()
    elapsed = (time.perf_counter() - start) * 1000.0

    if args.json:
        payload = {
            "input_spec": _input_spec_payload(ms, spec),
            "query": {"kind": args.kind, "m": args.m, "method": method},
            "result": str(result),
            "elapsed_ms": {method: round(elapsed, 3)},
        }
        if args.klass is not None:
            payload["query"]["class"] = args.klass
        if solutions is not None:
            payload["lambda_solutions"] = solutions
        _emit(payload)
        return 0
    if solutions is not None:
        for sol in solutions:
            print(" ".join(map(str, sol)))
    print(result)
    return 0


def _render_subs_triangle(table) -> str:
    spec = table.spec.k
    if not spec:
        return "1"
    display = [(spec[0], (1,))]
    for idx, row in enumerate(table.rows):
        pad = spec[idx + 1] if idx + 1 < len(spec) else 0
        display.append((pad, row))
    width = max(len(str(v)) for _, row in display for v in row)
    lines = []
    for pad, row in display:
        cells = ["0"] * pad + [str(v) for v in row] + ["0"] * pad
        indent = " " * ((spec[0] - pad) * (width + 1))
        lines.append((indent + " ".join(c.rjust(width) for c in cells)).rstrip())
    return "\n".join(lines)


def _perm_step_lines(prev, k_r: int, result) -> list[str]:
    ncols = len(prev)
    body = []
    for i in range(len(result)):
        lo = max(0, i - k_r)
        hi = min(i, ncols - 1)
        body.append([
            str(math.comb(i, j)) if lo <= j <= hi else "0" for j in range(ncols)
        ])
    head = [str(v) for v in prev]
    col_w = [
        max(len(head[j]), max(len(row[j]) for row in body)) for j in range(ncols)
    ]
    idx_w = len(str(len(result) - 1))
    res_w = max(len(str(v)) for v in result)
    lines = [" " * (idx_w + 3) + " ".join(head[j].rjust(col_w[j]) for j in range(ncols))]
    for i, row in enumerate(body):
        cells = " ".join(row[j].rjust(col_w[j]) for j in range(ncols))
        lines.append(f"{str(i).rjust(idx_w)} | {cells} | {str(result[i]).rjust(res_w)}")
    return lines


def _cmd_table(args) -> int:
    ms, spec = _load_spec(args)
    if args.kind == "subs":
        table = build_subs_table(spec, keep_all_rows=True)
        if args.json:
            _emit({
                "input_spec": _input_spec_payload(ms, spec),
                "query": {"kind": "table_subs"},
                "rows": [[str(v) for v in row] for row in table.rows],
                "final_row": [str(v) for v in table.final_row],
            })
        else:
            print(_render_subs_triangle(table))
        return 0

    ptable = build_perm_table(spec)
    if args.json:
        _emit({
            "input_spec": _input_spec_payload(ms, spec),
            "query": {"kind": "table_perms"},
            "columns": [[str(v) for v in col] for col in ptable.columns],
            "final_column": [str(v) for v in ptable.final_column],
        })
        return 0
    if not spec.k:
        print("1")
        return 0
    print(" ".join("1" for _ in ptable.columns[0]))
    for r in range(2, len(spec.k) + 1):
        print()
        for line in _perm_step_lines(ptable.columns[r - 2], spec.k[r - 1],
                                     ptable.columns[r - 1]):
            print(line)
    return 0


def _cmd_verify(args) -> int:
    ms, spec = _load_spec(args)
    checks = dict(check_spec_identities(spec))
    final = build_subs_table(spec).final_row
    checks["total_count"] = sum(final) == multiboolean_cardinality(spec)
    checks["symmetry"] = final == tuple(reversed(final))
    passed = all(checks.values())
    if args.json:
        _emit({
            "input_spec": _input_spec_payload(ms, spec),
            "checks": checks,
            "passed": passed,
        })
    else:
        for name, ok in checks.items():
            print(f"{name}: {'ok' if ok else 'FAIL'}")
        print("all checks passed" if passed else "verification FAILED")
    return 0 if passed else 2


def _cmd_bench(args) -> int:
    if args.m < 0:
        raise ValueError("m must be non-negative")
    ms, spec = _load_spec(args, m=args.m)
    report = run_bench(spec, args.m, EnumBudget(args.budget))
    files = write_report(report, args.report_dir) if args.report_dir else ()
    if args.json:
        _emit({
            "input_spec": _input_spec_payload(ms, spec),
            "query": {"kind": "bench", "m": args.m},
            "methods": [
                {
                    "kind": run.kind,
                    "method": run.method,
                    "result": None if run.result is None else str(run.result),
                    "elapsed_ms": round(run.elapsed_ms, 3),
                    "ops": run.ops,
                    "lambda_solutions": run.lambda_solutions,
                    "error": run.error,
                }
                for run in report.runs
            ],
            "methods_agree": report.methods_agree,
            "report_files": list(files),
        })
    else:
        for run in report.runs:
            note = f"ops={run.ops}"
            if run.lambda_solutions is not None:
                note += f" solutions={run.lambda_solutions}"
            if run.error is not None:
                print(f"{run.kind:5s} {run.method:12s} skipped ({run.error})")
            else:
                print(f"{run.kind:5s} {run.method:12s} {run.result} "
                      f"{run.elapsed_ms:8.3f} ms  {note}")
        print("methods agree:", "yes" if report.methods_agree else "NO")
        for path in files:
            print(f"wrote {path}", file=sys.stderr)
    return 0 if report.methods_agree else 2
