"""Exact m-submultiset and m-permutation counts of finite multisets."""

from .core import (
    UNBOUNDED,
    AdjointSpec,
    Multiset,
    PrimarySpec,
    SecondarySpec,
    Tally,
    adjoint_spec,
    as_primary_spec,
    binom,
    check_spec_identities,
    is_self_adjoint,
    multiboolean_cardinality,
    multinomial,
    parse_multiset,
    primary_spec,
    secondary_spec,
    spec_transform,
)
from .lambdas import (
    LambdaSolution,
    count_lambda_unconstrained,
    enumerate_lambda,
    enumerate_lambda_weighted,
)
from .subcount import (
    count_onto_unbounded,
    count_subs_composition,
    count_subs_constant,
    count_subs_continuous,
    count_subs_function,
    count_subs_general,
    count_subs_linear,
    count_subs_step,
)
from .pascal import SubsTable, build_subs_table, count_subs_dp, subs_row_next
from .perm import (
    PermTable,
    build_perm_table,
    count_perms_dp,
    count_perms_full,
    count_perms_general,
    perm_col_next,
)
from .oracle import (
    BudgetExceededError,
    EnumBudget,
    count_perms_brute,
    count_subs_brute,
    enumerate_submultisets,
)
from .bench import BenchReport, MethodRun, run_bench, write_report

__version__ = "0.1.0"

__all__ = [
    "UNBOUNDED",
    "AdjointSpec",
    "BenchReport",
    "BudgetExceededError",
    "EnumBudget",
    "LambdaSolution",
    "MethodRun",
    "Multiset",
    "PermTable",
    "PrimarySpec",
    "SecondarySpec",
    "SubsTable",
    "Tally",
    "adjoint_spec",
    "as_primary_spec",
    "binom",
    "build_perm_table",
    "build_subs_table",
    "check_spec_identities",
    "count_lambda_unconstrained",
    "count_onto_unbounded",
    "count_perms_brute",
    "count_perms_dp",
    "count_perms_full",
    "count_perms_general",
    "count_subs_brute",
    "count_subs_composition",
    "count_subs_constant",
    "count_subs_continuous",
    "count_subs_dp",
    "count_subs_function",
    "count_subs_general",
    "count_subs_linear",
    "count_subs_step",
    "enumerate_lambda",
    "enumerate_lambda_weighted",
    "enumerate_submultisets",
    "is_self_adjoint",
    "multiboolean_cardinality",
    "multinomial",
    "parse_multiset",
    "perm_col_next",
    "primary_spec",
    "run_bench",
    "secondary_spec",
    "spec_transform",
    "subs_row_next",
    "write_report",
]
