from .bench_cases import BENCH_CASES, BenchCase, Expected, bench_case, parse_ext
from .commands import (
    EXIT_ERROR,
    EXIT_EXISTS,
    EXIT_NO_LIMIT,
    BenchResult,
    __version__,
    build_parser,
    cmd_bench,
    cmd_branches,
    cmd_limit,
    run,
    run_bench,
    run_case,
)
from .expression import ExprAst, parse_expr, parse_poly, tokenize
from .report import ext_json, outcome_json, value_json

__all__ = [
    "BENCH_CASES",
    "BenchCase",
    "BenchResult",
    "EXIT_ERROR",
    "EXIT_EXISTS",
    "EXIT_NO_LIMIT",
    "ExprAst",
    "Expected",
    "__version__",
    "bench_case",
    "build_parser",
    "cmd_bench",
    "cmd_branches",
    "cmd_limit",
    "ext_json",
    "outcome_json",
    "parse_expr",
    "parse_ext",
    "parse_poly",
    "run",
    "run_bench",
    "run_case",
    "tokenize",
    "value_json",
]
