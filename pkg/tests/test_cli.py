import json
import time
from fractions import Fraction

import pytest

from algebraic import RealAlgebraic
from arith import upoly
from cli import (
    EXIT_ERROR,
    EXIT_EXISTS,
    EXIT_NO_LIMIT,
    Expected,
    bench_case,
    build_parser,
    parse_ext,
    run,
    value_json,
)
from cli.commands import parse_point
from errors import PreconditionError
from limits import ExtReal, LimitOutcome, OutcomeKind, RangeInterval

F2, G2 = "x^4+3*x^2*y-x^2-y^2", "x^2+y^2"
SQRT2_OVER_4 = RealAlgebraic.roots_of(upoly([-1, 0, 8]))[1]
FULL_BENCH_SECONDS = 60


def test_limit_exists(capsys):
    assert run(["limit", "--f", F2, "--g", G2]) == EXIT_EXISTS
    assert capsys.readouterr().out.strip() == "limit = -1"


def test_limit_with_range(capsys):
    assert run(["limit", "--f", "x^2", "--g", "x^4+y^4", "--range"]) == EXIT_NO_LIMIT
    assert capsys.readouterr().out.strip() == "no limit; range = [0, +inf]"


def test_limit_without_range_flag(capsys):
    assert run(["limit", "--f", "x^2", "--g", "x^4+y^4"]) == EXIT_NO_LIMIT
    assert capsys.readouterr().out.strip() == "no limit"


def test_limit_infinite(capsys):
    assert run(["limit", "--f", "1", "--g", "x^2+y^2"]) == EXIT_NO_LIMIT
    assert capsys.readouterr().out.strip() == "no finite limit; limit = +inf"


def test_limit_at_point(capsys):
    assert run(["limit", "--f", "x + y", "--g", "x + 1", "--at", "1,2"]) == EXIT_EXISTS
    assert capsys.readouterr().out.strip() == "limit = 3/2"


def test_negative_leading_expression(capsys):
    assert run(["limit", "--f=-x^2-y^2", "--g", "x^2+y^2"]) == EXIT_EXISTS
    assert capsys.readouterr().out.strip() == "limit = -1"


@pytest.mark.parametrize(
    "argv",
    [
        ["limit", "--f", "x", "--g", "0"],
        ["limit", "--f", "xy", "--g", "x"],
        ["limit", "--f", "x", "--g", "y", "--at", "1"],
        ["limit", "--f", "x", "--g", "y", "--at", "1,a"],
        ["bench", "--case", "99"],
        ["branches", "--f", "0"],
    ],
)
def test_errors_exit_with_one(argv, capsys):
    assert run(argv) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error: ")


def test_bad_arguments_exit_with_one():
    with pytest.raises(SystemExit) as error:
        run(["limit", "--f", "x"])
    assert error.value.code == EXIT_ERROR
    with pytest.raises(SystemExit) as error:
        run(["frobnicate"])
    assert error.value.code == EXIT_ERROR


def test_version(capsys):
    with pytest.raises(SystemExit) as error:
        run(["--version"])
    assert error.value.code == 0
    assert capsys.readouterr().out.startswith("bilimit ")


def test_limit_json(capsys):
    assert run(["limit", "--f", "x^2", "--g", "x^4+y^4", "--range", "--json"]) == EXIT_NO_LIMIT
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {
        "exists",
        "limit",
        "range",
        "isolated_zero",
        "shear",
        "truncation",
        "time_ms",
    }
    assert report["exists"] is False
    assert report["limit"] is None
    assert report["range"]["min"]["exact"] == "0"
    assert report["range"]["max"] == "+inf"
    assert report["isolated_zero"] is True
    assert report["shear"]["kind"] == "x"
    assert set(report["truncation"]) == {"M", "N"}


def test_limit_json_of_existing_limit(capsys):
    assert run(["limit", "--f", F2, "--g", G2, "--json"]) == EXIT_EXISTS
    report = json.loads(capsys.readouterr().out)
    assert report["exists"] is True
    assert report["limit"]["exact"] == "-1"
    assert report["limit"]["minpoly"] == "t + 1"
    assert report["range"] is None


def test_value_json_of_algebraic_number():
    payload = value_json(SQRT2_OVER_4)
    assert payload["minpoly"] == "8*t^2 - 1"
    assert payload["approx"] == "0.353553390593"
    assert "exact" not in payload
    lo, hi = (Fraction(v) for v in payload["interval"])
    assert 0 <= lo <= hi
    assert 8 * lo * lo <= 1 <= 8 * hi * hi


def test_branches_of_cusp(capsys):
    assert run(["branches", "--f", "y^2 - x^3", "--side", "plus"]) == EXIT_EXISTS
    assert capsys.readouterr().out.splitlines() == [
        "plus: y = -x^(3/2) + O(x^2)",
        "plus: y = x^(3/2) + O(x^2)",
    ]


def test_branches_cluster_at_low_level(capsys):
    run(["branches", "--f", "y^2 - x^3", "--side", "plus", "-N", "1"])
    assert capsys.readouterr().out.strip() == "plus: y = O(x^1)  [cluster 2]"


@pytest.mark.parametrize(
    "argv",
    [
        ["branches", "--f", "y^2 - x^3", "--side", "minus"],
        ["branches", "--f", "x^2 + y^2"],
        ["branches", "--f", "1 + x"],
    ],
)
def test_no_real_branches(argv, capsys):
    assert run(argv) == EXIT_EXISTS
    assert capsys.readouterr().out.strip() == "no real branches"


def test_branches_shear_note(capsys):
    assert run(["branches", "--f", "x*y"]) == EXIT_EXISTS
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "note: input is not y-regular; applied x <- x + 1*y, f = x*y + y^2"
    assert len(lines) == 5
    assert all(line.startswith(("plus: ", "minus: ")) for line in lines[1:])


def test_bench_single_case(capsys):
    assert run(["bench", "--case", "18"]) == EXIT_EXISTS
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("case 18: PASS  no limit; range = [0, +inf]")
    assert lines[1].startswith("passed 1/1")


def test_bench_json(capsys):
    assert run(["bench", "--case", "19", "--json"]) == EXIT_EXISTS
    [report] = json.loads(capsys.readouterr().out)
    assert report["id"] == 19
    assert report["passed"] is True
    assert report["expected"]["range"] == ["-inf", "+inf"]
    assert report["range"]["min"] == "-inf"


@pytest.mark.slow
def test_full_bench(capsys):
    started = time.perf_counter()
    assert run(["bench"]) == EXIT_EXISTS
    assert time.perf_counter() - started < FULL_BENCH_SECONDS
    assert capsys.readouterr().out.splitlines()[-1].startswith("passed 21/21")


def test_parse_ext():
    assert parse_ext("+inf") == ExtReal.pos_inf()
    assert parse_ext("-inf") == ExtReal.neg_inf()
    assert parse_ext("-19/3") == ExtReal.finite(Fraction(-19, 3))
    assert parse_ext("root(8*t^2 - 1, [0, 1])") == ExtReal.finite(SQRT2_OVER_4)


def test_expected_matches_exactly():
    expected = Expected(
        OutcomeKind.DOES_NOT_EXIST,
        range=("0", "1"),
        isolated_zero=True,
    )
    interval = RangeInterval(ExtReal.finite(0), ExtReal.finite(1))
    outcome = LimitOutcome.does_not_exist(interval)
    outcome.diagnostics.isolated_zero = True
    assert expected.matches(outcome)
    assert not expected.matches(LimitOutcome.exists_finite(0))


def test_bench_case_lookup():
    assert bench_case(4).expected.range_value.max == ExtReal.finite(SQRT2_OVER_4)
    with pytest.raises(KeyError):
        bench_case(0)


def test_parse_point():
    assert parse_point("1/2,-3") == (Fraction(1, 2), Fraction(-3))
    with pytest.raises(PreconditionError):
        parse_point("1,2,3")


def test_parser_defaults():
    args = build_parser().parse_args(["limit", "--f", "x", "--g", "y"])
    assert (args.at, args.json, args.range) == ("0,0", False, False)
