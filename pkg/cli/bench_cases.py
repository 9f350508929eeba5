import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import sympy

from algebraic import RealAlgebraic
from arith import IntervalQ, T, parse_rational, upoly_from_expr
from limits import ExtReal, LimitOutcome, OutcomeKind, RangeInterval

_ROOT_PATTERN = re.compile(r"^root\((?P<poly>.+), \[(?P<lo>[^,]+), (?P<hi>[^\]]+)\]\)$")


def parse_ext(text: str) -> ExtReal:
    """
    Значение из таблицы ожидаемых результатов: `p/q`, `+inf`, `-inf`
    или `root(<многочлен от t>, [lo, hi])`.
    """
    text = text.strip()
    if text == "+inf":
        return ExtReal.pos_inf()
    if text == "-inf":
        return ExtReal.neg_inf()
    match = _ROOT_PATTERN.match(text)
    if match is None:
        return ExtReal.finite(parse_rational(text))
    poly = upoly_from_expr(sympy.sympify(match["poly"].replace("^", "**"), locals={"t": T}))
    interval = IntervalQ(parse_rational(match["lo"]), parse_rational(match["hi"]))
    return ExtReal.finite(RealAlgebraic.from_root(poly, interval))


@dataclass(frozen=True)
class Expected:
    """Ожидаемый вердикт: вид исхода, предел, диапазон, изолированность нуля."""

    kind: OutcomeKind
    limit: Optional[str] = None
    range: Optional[Tuple[str, str]] = None
    isolated_zero: Optional[bool] = None

    @property
    def limit_value(self) -> Optional[ExtReal]:
        return None if self.limit is None else parse_ext(self.limit)

    @property
    def range_value(self) -> Optional[RangeInterval]:
        if self.range is None:
            return None
        return RangeInterval(parse_ext(self.range[0]), parse_ext(self.range[1]))

    def matches(self, outcome: LimitOutcome) -> bool:
        """Точное сравнение; алгебраические концы сравниваются как числа."""
        if outcome.kind is not self.kind:
            return False
        if self.limit is not None and ExtReal.finite(outcome.value) != self.limit_value:
            return False
        if self.kind is OutcomeKind.DOES_NOT_EXIST:
            if self.range is None and outcome.range is not None:
                return False
            if self.range is not None and outcome.range != self.range_value:
                return False
        if self.isolated_zero is not None:
            return outcome.diagnostics.isolated_zero == self.isolated_zero
        return True

    def as_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "limit": self.limit,
            "range": list(self.range) if self.range is not None else None,
            "isolated_zero": self.isolated_zero,
        }


@dataclass(frozen=True)
class BenchCase:
    id: int
    f_text: str
    g_text: str
    expected: Expected


def _product(*texts: str) -> str:
    return " * ".join(f"({text})" for text in texts)


def _limit(value: str) -> Expected:
    return Expected(OutcomeKind.EXISTS_FINITE, limit=value)


def _range(lo: str, hi: str) -> Expected:
    return Expected(OutcomeKind.DOES_NOT_EXIST, range=(lo, hi), isolated_zero=True)


F1, G1 = "x^4 + x^2*y + y^2", "x^2 + y^2"
F2, G2 = "x^4 + 3*x^2*y - x^2 - y^2", "x^2 + y^2"
F3 = (
    "2*y^5 + x^2*y^2 - 8*x*y^3 - 13*y^4 - 2*x^3 + 6*x^2*y + 28*x*y^2"
    " + 24*y^3 - 4*x^2 - 12*x*y - 9*y^2"
)
G3 = "y^4 - 5*x*y^2 - 4*y^3 + 7*x^2 + 10*x*y + 4*y^2"
F4 = "4*x^2*y^2 - 4*x*y^3 + y^4 - 2*x*y^2 + y^3"
G4 = "8*x^2*y^2 - 8*x*y^3 + 3*y^4 + 8*x^2 - 8*x*y + 2*y^2"
F5 = "10*x^2*y^2 + x^3 + 2*x^2*y + 4*x*y^2 + 6*x^2 + 6*x*y + 3*y^2"
G5 = "3*x^2*y^2 + 2*x^3 + 2*x*y + y^2"
F6 = "2*x^2*y^2 + x^2*y + 2*x*y^2 + y^3 + x^2 + 2*x*y + 2*y^2"
G6 = "x^2*y^2 + x^2 + 2*x*y + 2*y^2"
F7, G7 = F5, "3*x^2*y^2 + 2*x^2 + 2*x*y + y^2"
F8 = "10*x^2*y - 26*x^3 + 37*x^2*y^2 - 8*x*y^3 + 2*y^5 - 18*x*y^4 + 3*y^6"
G8 = "24*x^2 + 3*y^2 - 21*x*y^2 - 5*x*y + 2*y^3 + 5*y^4"
F9, G9 = F6, "x^4*y^4 + x^2 + 2*x*y + 2*y^2"

SQRT2_OVER_4 = "root(8*t^2 - 1, [0, 1])"
MINUS_SQRT2_OVER_4 = "root(8*t^2 - 1, [-1, 0])"

BENCH_CASES: List[BenchCase] = [
    BenchCase(1, F1, G1, _range("0", "1")),
    BenchCase(2, F2, G2, _limit("-1")),
    BenchCase(3, F3, G3, _range("-19/3", "0")),
    BenchCase(4, F4, G4, _range(MINUS_SQRT2_OVER_4, SQRT2_OVER_4)),
    BenchCase(5, F5, G5, Expected(OutcomeKind.DOES_NOT_EXIST, isolated_zero=False)),
    BenchCase(6, F6, G6, _limit("1")),
    BenchCase(7, F7, G7, _limit("3")),
    BenchCase(8, F8, G8, _limit("0")),
    BenchCase(9, F9, G9, _limit("1")),
    BenchCase(10, _product(F2, F7), _product(G2, G7), _limit("-3")),
    BenchCase(11, _product(F6, F7), _product(G6, G7), _limit("3")),
    BenchCase(12, _product(F2, F6), _product(G2, G6), _limit("-1")),
    BenchCase(
        13,
        f"{_product(F2, F6)} + x^6*y^6",
        f"{_product(G2, G6)} + x^4*y^4",
        _limit("-1"),
    ),
    BenchCase(
        14,
        f"{_product(F2, F6)} + x^10*y^10",
        f"{_product(G2, G6)} + x^8*y^8",
        _limit("-1"),
    ),
    BenchCase(15, _product(F2, F6, F7), _product(G2, G6, G7), _limit("-3")),
    BenchCase(16, _product(F2, F6, F7, F8), _product(G2, G6, G7, G8), _limit("0")),
    BenchCase(17, _product(F2, F6, F7, F9), _product(G2, G6, G7, G9), _limit("-3")),
    BenchCase(18, "x^2", "x^4 + y^4", _range("0", "+inf")),
    BenchCase(19, "x^3", "x^4 + y^4", _range("-inf", "+inf")),
    BenchCase(20, "x^4 + x^2*y + y^2", "x^6 + y^2", _range("3/4", "+inf")),
    BenchCase(21, "x^4 + x^2*y^2 + y^4", "x^6 + y^4", _range("1", "+inf")),
]


@lru_cache(maxsize=None)
def bench_case(case_id: int) -> BenchCase:
    """
    Raises:
        KeyError: если примера с таким номером нет
    """
    for case in BENCH_CASES:
        if case.id == case_id:
            return case
    raise KeyError(f"Нет примера с номером {case_id}")
