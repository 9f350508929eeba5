from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

from algebraic import RealAlgebraic
from arith import RationalLike
from bipoly import Shear
from errors import PreconditionError
from puiseux import PuiseuxBranch


class ExtTag(str, Enum):
    NEG_INF = "neg_inf"
    FINITE = "finite"
    POS_INF = "pos_inf"


@total_ordering
@dataclass(frozen=True, eq=False)
class ExtReal:
    """Расширенное вещественное число: -inf, конечное алгебраическое или +inf."""

    tag: ExtTag
    value: Optional[RealAlgebraic] = None

    @classmethod
    def finite(cls, value: Union[RealAlgebraic, RationalLike]) -> "ExtReal":
        if not isinstance(value, RealAlgebraic):
            value = RealAlgebraic.from_rational(value)
        return cls(ExtTag.FINITE, value)

    @classmethod
    def pos_inf(cls) -> "ExtReal":
        return cls(ExtTag.POS_INF)

    @classmethod
    def neg_inf(cls) -> "ExtReal":
        return cls(ExtTag.NEG_INF)

    @classmethod
    def infinite(cls, sign: int) -> "ExtReal":
        if sign == 0:
            raise PreconditionError("Бесконечность без знака")
        return cls.pos_inf() if sign > 0 else cls.neg_inf()

    @property
    def is_finite(self) -> bool:
        return self.tag is ExtTag.FINITE

    @property
    def sign(self) -> int:
        if self.tag is ExtTag.POS_INF:
            return 1
        if self.tag is ExtTag.NEG_INF:
            return -1
        return self.value.sign()

    def _rank(self) -> int:
        return {ExtTag.NEG_INF: 0, ExtTag.FINITE: 1, ExtTag.POS_INF: 2}[self.tag]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtReal):
            return NotImplemented
        return self.tag is other.tag and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.tag, self.value))

    def __lt__(self, other: "ExtReal") -> bool:
        if self.tag is not other.tag:
            return self._rank() < other._rank()
        if self.is_finite:
            return self.value < other.value
        return False

    def __str__(self) -> str:
        if self.tag is ExtTag.POS_INF:
            return "+inf"
        if self.tag is ExtTag.NEG_INF:
            return "-inf"
        return str(self.value)


@dataclass(frozen=True)
class RangeInterval:
    """Замкнутый отрезок [MIN, MAX] частичных пределов."""

    min: ExtReal
    max: ExtReal

    def __post_init__(self):
        if self.max < self.min:
            raise PreconditionError(f"Пустой диапазон [{self.min}, {self.max}]")

    @classmethod
    def singleton(cls, value: ExtReal) -> "RangeInterval":
        return cls(value, value)

    @property
    def is_singleton(self) -> bool:
        return self.min == self.max

    def __str__(self) -> str:
        return f"[{self.min}, {self.max}]"


@dataclass
class Diagnostics:
    """Подробности вычисления, не влияющие на вердикт."""

    shear: Optional[Shear] = None
    separation_level: int = 0
    truncation_level: int = 0
    branch_count: int = 0
    isolated_zero: bool = False
    route: str = ""


class OutcomeKind(str, Enum):
    EXISTS_FINITE = "exists_finite"
    INFINITE = "infinite"
    DOES_NOT_EXIST = "does_not_exist"


@dataclass
class LimitOutcome:
    """
    Вердикт: конечный предел, бесконечный предел или отсутствие предела.

    Бесконечный предел не считается существующим (exists = False) и
    несёт одноточечный диапазон {+inf} или {-inf}.
    """

    kind: OutcomeKind
    value: Optional[RealAlgebraic] = None
    infinite_sign: int = 0
    range: Optional[RangeInterval] = None
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    @classmethod
    def exists_finite(
        cls,
        value: Union[RealAlgebraic, RationalLike],
        range: Optional[RangeInterval] = None,
        diagnostics: Optional[Diagnostics] = None,
    ) -> "LimitOutcome":
        if not isinstance(value, RealAlgebraic):
            value = RealAlgebraic.from_rational(value)
        if range is not None and not (
            range.is_singleton and range.min == ExtReal.finite(value)
        ):
            raise PreconditionError(f"Диапазон {range} не совпадает с пределом {value}")
        return cls(
            OutcomeKind.EXISTS_FINITE,
            value=value,
            range=range,
            diagnostics=diagnostics or Diagnostics(),
        )

    @classmethod
    def infinite(cls, sign: int, diagnostics: Optional[Diagnostics] = None) -> "LimitOutcome":
        return cls(
            OutcomeKind.INFINITE,
            infinite_sign=sign,
            range=RangeInterval.singleton(ExtReal.infinite(sign)),
            diagnostics=diagnostics or Diagnostics(),
        )

    @classmethod
    def does_not_exist(
        cls,
        range: Optional[RangeInterval] = None,
        diagnostics: Optional[Diagnostics] = None,
    ) -> "LimitOutcome":
        return cls(
            OutcomeKind.DOES_NOT_EXIST,
            range=range,
            diagnostics=diagnostics or Diagnostics(),
        )

    @property
    def exists(self) -> bool:
        return self.kind is OutcomeKind.EXISTS_FINITE

    @property
    def rational_value(self) -> Optional[Fraction]:
        if self.value is None or not self.value.is_rational:
            return None
        return self.value.rational

    def text(self) -> str:
        if self.kind is OutcomeKind.EXISTS_FINITE:
            return f"limit = {self.value}"
        if self.kind is OutcomeKind.INFINITE:
            return f"no finite limit; limit = {ExtReal.infinite(self.infinite_sign)}"
        if self.range is None and not self.diagnostics.isolated_zero:
            return "no limit; range not computed (non-isolated zero of the denominator)"
        if self.range is None:
            return "no limit"
        return f"no limit; range = {self.range}"

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class BranchLimit:
    """Предел f/g вдоль усечённой полуветви."""

    branch: PuiseuxBranch
    value: ExtReal
    order_f: Union[Fraction, float]
    order_g: Fraction
