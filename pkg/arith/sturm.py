from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import sympy

IntCoeffs = Tuple[int, ...]


def scaled_value(coeffs: Sequence[int], point: Fraction) -> int:
    """
    Значение многочлена в точке p/q, умноженное на q^deg.

    Знак совпадает со знаком значения, а считается всё в целых числах.
    """
    num, den = point.numerator, point.denominator
    value, scale = 0, 1
    for c in coeffs:
        value = value * num + c * scale
        scale *= den
    return value


def horner(coeffs: Sequence[int], point: Fraction) -> Fraction:
    """Значение многочлена (коэффициенты по убыванию степени) в точке."""
    if not coeffs:
        return Fraction(0)
    point = Fraction(point)
    return Fraction(
        scaled_value(coeffs, point), point.denominator ** (len(coeffs) - 1)
    )


def _derivative(coeffs: Sequence[int]) -> IntCoeffs:
    degree = len(coeffs) - 1
    return tuple(c * (degree - i) for i, c in enumerate(coeffs[:-1]))


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def one_sided_sign(coeffs: Sequence[int], point: Fraction, side: int) -> int:
    """
    Знак многочлена в точке point + side*eps для бесконечно малого eps.

    При side = 0 возвращается знак в самой точке. Если точка является
    корнем, знак справа равен знаку первой ненулевой производной, слева
    он домножается на (-1)^k.
    """
    point = Fraction(point)
    current: Sequence[int] = coeffs
    order = 0
    while current:
        s = _sign(scaled_value(current, point))
        if s != 0 or side == 0:
            if side < 0 and order % 2 == 1:
                s = -s
            return s
        current = _derivative(current)
        order += 1
    return 0


def _primitive(poly: sympy.Poly) -> IntCoeffs:
    """Примитивные целые коэффициенты с тем же знаком, что у poly."""
    _, integral = poly.clear_denoms(convert=True)
    _, primitive = integral.primitive()
    return tuple(int(c) for c in primitive.all_coeffs())


class SturmChain:
    """Последовательность Штурма целочисленного бесквадратного многочлена."""

    def __init__(self, coeffs: IntCoeffs):
        """
        Args:
            coeffs: Целые коэффициенты по убыванию степени
        """
        self.coeffs = coeffs
        self.chain: List[IntCoeffs] = self._build(coeffs)

    @staticmethod
    def _build(coeffs: IntCoeffs) -> List[IntCoeffs]:
        if len(coeffs) <= 1:
            return [tuple(coeffs)]
        t = sympy.Symbol("t")
        s0 = sympy.Poly.from_list(list(coeffs), t, domain=sympy.QQ)
        # члены цепочки с точностью до положительного множителя
        return [_primitive(s) for s in s0.sturm()]

    def variations(self, point: Optional[Fraction], side: int = 0) -> int:
        """
        Число перемен знака в точке; point=None с side=+1/-1 означает ±∞.
        """
        signs = []
        for coeffs in self.chain:
            if point is None:
                degree = len(coeffs) - 1
                s = _sign(coeffs[0])
                if side < 0 and degree % 2 == 1:
                    s = -s
            else:
                s = one_sided_sign(coeffs, point, side)
            if s != 0:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count_open(self, lo: Optional[Fraction], hi: Optional[Fraction]) -> int:
        """Число различных корней в открытом интервале (lo, hi)."""
        v_lo = self.variations(lo, +1) if lo is not None else self.variations(None, -1)
        v_hi = self.variations(hi, -1) if hi is not None else self.variations(None, +1)
        return v_lo - v_hi

    def is_root(self, point: Fraction) -> bool:
        return scaled_value(self.coeffs, Fraction(point)) == 0

    def count_closed(self, lo: Fraction, hi: Fraction) -> int:
        """Число различных корней на отрезке [lo, hi]."""
        if lo == hi:
            return int(self.is_root(lo))
        return (
            self.count_open(lo, hi)
            + int(self.is_root(lo))
            + int(self.is_root(hi))
        )


@lru_cache(maxsize=4096)
def sturm_chain(coeffs: IntCoeffs) -> SturmChain:
    return SturmChain(coeffs)
