import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union

from algebraic import TowerElem, alg_is_zero, alg_sign
from arith import format_rational
from bipoly import INFINITY, BiPoly

Term = Tuple[Fraction, TowerElem]


class Side(str, Enum):
    """Полуветвь справа (x -> 0+) или слева (x -> 0-)."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def variable(self) -> str:
        return "x" if self is Side.PLUS else "(-x)"


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return "" if e == 1 else f"^{e.numerator}"
    return f"^({e.numerator}/{e.denominator})"


def _format_term(exponent: Fraction, coeff: TowerElem, variable: str, first: bool) -> str:
    monomial = f"{variable}{_format_exponent(exponent)}"
    if coeff.is_rational:
        value = coeff.as_fraction
        magnitude = abs(value)
        body = monomial if magnitude == 1 else f"{format_rational(magnitude)}*{monomial}"
        if value < 0:
            return f"-{body}" if first else f"- {body}"
        return body if first else f"+ {body}"
    body = f"{coeff.collapse()}*{monomial}"
    return body if first else f"+ {body}"


@dataclass(frozen=True)
class PuiseuxBranch:
    """
    Усечённый вещественный корень Ньютона-Пюизё.

    Члены хранятся по переменной t = x на правой стороне и t = -x на
    левой; все показатели положительны, строго возрастают и меньше
    уровня усечения. cluster: сколько корней (с кратностью) имеют это
    усечение.
    """

    side: Side
    terms: Tuple[Term, ...]
    truncation: Fraction
    cluster: int = 1

    @property
    def ramification(self) -> int:
        return math.lcm(1, *(e.denominator for e, _ in self.terms))

    @property
    def exponents(self) -> Tuple[Fraction, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def is_separated(self) -> bool:
        return self.cluster == 1

    def truncated(self, level: Fraction) -> "PuiseuxBranch":
        level = Fraction(level)
        return PuiseuxBranch(
            self.side,
            tuple((e, c) for e, c in self.terms if e < level),
            level,
            self.cluster,
        )

    def with_term(self, exponent: Fraction, coeff: TowerElem) -> Tuple[Term, ...]:
        """Члены ветви с добавленным членом coeff*t^exponent."""
        return self.terms + ((Fraction(exponent), coeff),)

    def same_series(self, other: "PuiseuxBranch") -> bool:
        """Точное совпадение усечённых рядов (сторона, показатели, коэффициенты)."""
        if self.side != other.side or self.exponents != other.exponents:
            return False
        return all(alg_is_zero(a - b) for (_, a), (_, b) in zip(self.terms, other.terms))

    def sort_key(self) -> Tuple:
        return tuple((e, c.approximate()) for e, c in self.terms)

    def text(self) -> str:
        """`y = c1*x^(p1/q1) + ... + O(x^N)`."""
        variable = self.side.variable
        parts = [
            _format_term(e, c, variable, first=(k == 0))
            for k, (e, c) in enumerate(self.terms)
        ]
        tail = f"O(x^{format_rational(self.truncation)})"
        if not parts:
            return f"y = {tail}"
        return f"y = {' '.join(parts)} + {tail}"

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class BranchSet:
    """Множество усечённых вещественных корней одной стороны."""

    branches: Tuple[PuiseuxBranch, ...]
    source: BiPoly
    level: Fraction
    side: Side

    def __iter__(self) -> Iterator[PuiseuxBranch]:
        return iter(self.branches)

    def __len__(self) -> int:
        return len(self.branches)

    @property
    def is_empty(self) -> bool:
        return not self.branches

    @property
    def is_separated(self) -> bool:
        """Каждое усечение отвечает ровно одному корню."""
        return all(b.is_separated for b in self.branches)

    def contains(self, branch: PuiseuxBranch) -> bool:
        return any(b.same_series(branch) for b in self.branches)


@dataclass(frozen=True)
class SeriesLeading:
    """Порядок и старший коэффициент дробно-степенного ряда."""

    order: Union[Fraction, float]
    leading_coeff: Optional[TowerElem] = field(default=None)

    @classmethod
    def infinite(cls) -> "SeriesLeading":
        return cls(INFINITY, None)

    @property
    def is_infinite(self) -> bool:
        return self.order == INFINITY

    @property
    def sign(self) -> int:
        if self.leading_coeff is None:
            return 0
        return alg_sign(self.leading_coeff)
