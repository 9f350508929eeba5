from dataclasses import dataclass
from fractions import Fraction

from errors import PreconditionError


@dataclass(frozen=True)
class IntervalQ:
    """Замкнутый интервал [lo, hi] с рациональными концами."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise PreconditionError(f"Пустой интервал [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Fraction) -> "IntervalQ":
        value = Fraction(value)
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def sign(self) -> int:
        """Знак всех точек интервала; 0, если интервал задевает ноль."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def intersects(self, other: "IntervalQ") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other: "IntervalQ") -> "IntervalQ":
        return IntervalQ(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "IntervalQ":
        return IntervalQ(-self.hi, -self.lo)

    def __sub__(self, other: "IntervalQ") -> "IntervalQ":
        return self + (-other)

    def __mul__(self, other: "IntervalQ") -> "IntervalQ":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return IntervalQ(min(products), max(products))

    def scale(self, factor: Fraction) -> "IntervalQ":
        if factor >= 0:
            return IntervalQ(self.lo * factor, self.hi * factor)
        return IntervalQ(self.hi * factor, self.lo * factor)

    def __pow__(self, exponent: int) -> "IntervalQ":
        if exponent < 0:
            raise PreconditionError("Отрицательная степень интервала")
        if exponent == 0:
            return IntervalQ.point(Fraction(1))
        lo_p, hi_p = self.lo**exponent, self.hi**exponent
        if exponent % 2 == 1 or self.lo >= 0:
            return IntervalQ(min(lo_p, hi_p), max(lo_p, hi_p))
        if self.hi <= 0:
            return IntervalQ(hi_p, lo_p)
        # чётная степень интервала, содержащего ноль
        return IntervalQ(Fraction(0), max(lo_p, hi_p))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"
