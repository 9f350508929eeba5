from fractions import Fraction
from functools import cached_property, lru_cache, total_ordering
from typing import List, Tuple

import sympy

from arith import (
    IntervalQ,
    RationalLike,
    UniPoly,
    as_rational,
    bisect_root,
    chain_for,
    coefficients,
    format_rational,
    integer_coefficients,
    irreducible_factors,
    isolate_real_roots,
    upoly,
)
from errors import PreconditionError


def _format_upoly(p: UniPoly) -> str:
    """Запись многочлена от t с целыми коэффициентами: `8*t^2 - 1`."""
    parts: List[str] = []
    coeffs = list(integer_coefficients(p))
    degree = len(coeffs) - 1
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        power = degree - k
        if power == 0:
            body = str(abs(c))
        else:
            mono = "t" if power == 1 else f"t^{power}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


@total_ordering
class RealAlgebraic:
    """
    Точное вещественное алгебраическое число.

    Задаётся неприводимым над QQ приведённым минимальным многочленом,
    номером корня среди его вещественных корней (по возрастанию) и
    изолирующим отрезком. Два числа равны тогда и только тогда, когда
    совпадают минимальный многочлен и номер корня.
    """

    def __init__(self, minpoly: UniPoly, index: int, interval: IntervalQ):
        self.minpoly = minpoly
        self.index = index
        self.interval = interval

    # ------------------------------------------------------------------
    # Конструкторы
    # ------------------------------------------------------------------

    @classmethod
    def from_rational(cls, value: RationalLike) -> "RealAlgebraic":
        q = as_rational(value)
        return cls(upoly([-q, 1]), 0, IntervalQ.point(q))

    @classmethod
    def from_root(cls, poly: UniPoly, interval: IntervalQ) -> "RealAlgebraic":
        """
        Число, заданное корнем poly в отрезке.

        Args:
            poly: Ненулевой многочлен над QQ
            interval: Замкнутый отрезок, содержащий ровно один
                различный корень poly

        Raises:
            PreconditionError: если отрезок не изолирует корень
        """
        if interval.is_point:
            return cls.from_rational(interval.lo)
        for factor in irreducible_factors(poly):
            chain = chain_for(factor)
            if chain.count_closed(interval.lo, interval.hi) != 1:
                continue
            if factor.degree() == 1:
                lead, const = factor.all_coeffs()
                return cls.from_rational(-as_rational(const) / as_rational(lead))
            index = chain.count_open(None, interval.lo)
            return cls(factor, index, interval)
        raise PreconditionError(f"Отрезок {interval} не изолирует корень многочлена")

    @classmethod
    def roots_of(cls, poly: UniPoly) -> List["RealAlgebraic"]:
        """Все различные вещественные корни многочлена по возрастанию."""
        return list(_real_roots(poly))

    @classmethod
    def _isolate(cls, poly: UniPoly) -> List["RealAlgebraic"]:
        roots: List[RealAlgebraic] = []
        for factor in irreducible_factors(poly):
            if factor.degree() == 1:
                lead, const = factor.all_coeffs()
                roots.append(
                    cls.from_rational(-as_rational(const) / as_rational(lead))
                )
                continue
            for index, interval in enumerate(isolate_real_roots(factor)):
                roots.append(cls(factor, index, interval))
        return sorted(roots)

    # ------------------------------------------------------------------
    # Свойства
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.minpoly.degree()

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def rational(self) -> Fraction:
        if not self.is_rational:
            raise PreconditionError("Иррациональное число не имеет точной записи p/q")
        return self.interval.lo

    @cached_property
    def key(self) -> Tuple[Tuple[Fraction, ...], int]:
        return tuple(coefficients(self.minpoly)), self.index

    @cached_property
    def symbol(self) -> sympy.Symbol:
        """Символ образующей в башне расширений."""
        coeffs = ",".join(str(c) for c in integer_coefficients(self.minpoly))
        return sympy.Symbol(f"θ[{coeffs}|{self.index}]")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "RealAlgebraic") -> bool:
        if self == other:
            return False
        a, b = separate(self, other)
        return a.interval.hi < b.interval.lo

    # ------------------------------------------------------------------
    # Уточнение и знак
    # ------------------------------------------------------------------

    def bisected(self) -> "RealAlgebraic":
        """Новое число с изолирующим отрезком вдвое уже."""
        if self.interval.is_point:
            return self
        return RealAlgebraic(
            self.minpoly, self.index, bisect_root(self.minpoly, self.interval)
        )

    def refined(self, width: Fraction) -> "RealAlgebraic":
        current = self
        while current.interval.width > width:
            current = current.bisected()
        return current

    def sign(self) -> int:
        if self.is_rational:
            q = self.rational
            return (q > 0) - (q < 0)
        current = self
        # иррациональный корень не совпадает с 0, отрезок рано или поздно отделится
        while not current.interval.excludes_zero():
            current = current.bisected()
        return current.interval.sign()

    def __neg__(self) -> "RealAlgebraic":
        if self.is_rational:
            return RealAlgebraic.from_rational(-self.rational)
        negated = upoly_from_negation(self.minpoly)
        interval = -self.interval
        return RealAlgebraic.from_root(negated, interval)

    def to_decimal(self, digits: int) -> str:
        """
        Десятичная запись с фиксированной точкой, округление к чётному.
        """
        scale = 10**digits
        if self.is_rational:
            return _fixed_point(round(self.rational * scale), digits)
        current = self
        while True:
            lo = round(current.interval.lo * scale)
            hi = round(current.interval.hi * scale)
            if lo == hi:
                return _fixed_point(lo, digits)
            current = current.bisected()

    @property
    def defining_text(self) -> str:
        return _format_upoly(self.minpoly)

    def interval_text(self) -> Tuple[str, str]:
        return format_rational(self.interval.lo), format_rational(self.interval.hi)

    def __str__(self) -> str:
        if self.is_rational:
            return format_rational(self.rational)
        lo, hi = self.interval_text()
        return f"root({self.defining_text}, [{lo}, {hi}])"

    def __repr__(self) -> str:
        return f"RealAlgebraic({self})"


def upoly_from_negation(p: UniPoly) -> UniPoly:
    """Многочлен p(-t), корни которого противоположны корням p."""
    return upoly(
        [c if k % 2 == 0 else -c for k, c in enumerate(coefficients(p))], p.gen
    )


def separate(
    a: RealAlgebraic, b: RealAlgebraic
) -> Tuple[RealAlgebraic, RealAlgebraic]:
    """Уточняет два различных числа, пока их отрезки не разойдутся."""
    if a == b:
        raise PreconditionError("Нельзя разделить совпадающие числа")
    while a.interval.intersects(b.interval):
        if a.interval.width >= b.interval.width:
            a = a.bisected()
        else:
            b = b.bisected()
    return a, b


def alg_compare_real(a: RealAlgebraic, b: RealAlgebraic) -> int:
    if a == b:
        return 0
    return -1 if a < b else 1


def _fixed_point(scaled: int, digits: int) -> str:
    negative = scaled < 0
    text = str(abs(scaled)).rjust(digits + 1, "0")
    whole, frac = text[: len(text) - digits], text[len(text) - digits :]
    body = f"{whole}.{frac}" if digits > 0 else whole
    return f"-{body}" if negative else body



@lru_cache(maxsize=2048)
def _real_roots(poly: UniPoly) -> Tuple[RealAlgebraic, ...]:
    return tuple(RealAlgebraic._isolate(poly))
