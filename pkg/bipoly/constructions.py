import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterator, Sequence

import sympy

from arith import RationalLike, as_rational, format_rational
from config import SHEAR_SEARCH_LIMIT
from errors import NotYRegularError, PreconditionError, ShearSearchError
from logger import logger

from .bipoly import BiPoly


def jacobian_det(f: BiPoly, g: BiPoly) -> BiPoly:
    """F_{f,g} = f_x*g_y - f_y*g_x."""
    return f.diff_x() * g.diff_y() - f.diff_y() * g.diff_x()


def tangency_poly(f: BiPoly, g: BiPoly) -> BiPoly:
    """
    G_{f,g} = y(g*f_x - f*g_x) - x(g*f_y - f*g_y).

    Точка, в которой ищется предел, уже перенесена в начало координат.
    """
    fx, fy, gx, gy = f.diff_x(), f.diff_y(), g.diff_x(), g.diff_y()
    return BiPoly.y() * (g * fx - f * gx) - BiPoly.x() * (g * fy - f * gy)


def normalize(f: BiPoly) -> BiPoly:
    """Примитивный целочисленный многочлен с положительным старшим коэффициентом."""
    if f.is_zero:
        return f
    coeffs = [c for _, c in f]
    denominator = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs), 1)
    content = reduce(math.gcd, (abs(c.numerator * (denominator // c.denominator)) for c in coeffs), 0)
    factor = Fraction(denominator, content)
    if f.leading_coefficient() < 0:
        factor = -factor
    return f.scale(factor)


def gcd2(f: BiPoly, g: BiPoly) -> BiPoly:
    """Нормированный НОД в QQ[x, y]; gcd2(0, 0) = 0."""
    if f.is_zero and g.is_zero:
        return f
    if f.is_zero:
        return normalize(g)
    if g.is_zero:
        return normalize(f)
    return normalize(BiPoly.from_sympy(sympy.gcd(f.to_sympy(), g.to_sympy())))


def exact_quotient(f: BiPoly, d: BiPoly) -> BiPoly:
    """
    Частное f / d.

    Raises:
        PreconditionError: если d не делит f нацело
    """
    if d.is_zero:
        raise PreconditionError("Деление многочлена на нулевой многочлен")
    quotient, remainder = sympy.div(f.to_sympy(), d.to_sympy())
    if not remainder.is_zero:
        raise PreconditionError(f"Многочлен {d} не делит {f}")
    return BiPoly.from_sympy(quotient)


def squarefree(f: BiPoly) -> BiPoly:
    """Бесквадратная часть f / gcd(f, f_x, f_y), нормированная."""
    if f.is_zero:
        raise PreconditionError("Бесквадратная часть нулевого многочлена не определена")
    if f.is_constant:
        return BiPoly.constant(1)
    common = gcd2(gcd2(f, f.diff_x()), f.diff_y())
    return normalize(exact_quotient(f, common))


def coprime_part(f: BiPoly, g: BiPoly) -> BiPoly:
    """Часть бесквадратной части f, взаимно простая с g."""
    reduced = squarefree(f)
    if g.is_zero:
        return BiPoly.constant(1)
    return normalize(exact_quotient(reduced, gcd2(reduced, g)))


def squarefree_regularize(f: BiPoly, level: int, c: RationalLike) -> BiPoly:
    """
    f + c*(x^(mN) + y^(mN)) с тем же множеством усечённых корней уровня N.

    Args:
        f: y-регулярный многочлен порядка m > 0
        level: Уровень усечения N, m*N > deg f
        c: Ненулевая константа
    """
    if f.is_zero:
        raise PreconditionError("Регуляризация нулевого многочлена")
    if not f.is_y_regular():
        raise NotYRegularError(f"Многочлен {f} не y-регулярен")
    m = f.order()
    if m == 0:
        raise PreconditionError("Регуляризация требует порядка m > 0")
    if m * level <= f.degree:
        raise PreconditionError(
            f"Нужно m*N > deg f, а получено {m}*{level} <= {f.degree}"
        )
    c = as_rational(c)
    if c == 0:
        raise PreconditionError("Константа регуляризации должна быть ненулевой")
    power = m * level
    return f + BiPoly({(power, 0): c, (0, power): c})


def truncation_bound(d: int) -> Fraction:
    """((d - 1)^2 + 1) / 2."""
    if d < 1:
        raise PreconditionError(f"Граница усечения определена для d >= 1, получено {d}")
    return Fraction((d - 1) ** 2 + 1, 2)


def sound_level(d: int) -> int:
    """Наименьший целый уровень, строго больший границы усечения."""
    return math.floor(truncation_bound(max(d, 1))) + 1


@dataclass(frozen=True)
class Shear:
    """Линейная замена координат: `x` для x <- x + c*y, `y` для y <- x + y."""

    kind: str = "x"
    c: Fraction = Fraction(0)

    def apply(self, f: BiPoly) -> BiPoly:
        if self.kind == "y":
            return f.shear_y()
        return f.shear_x(self.c)

    @property
    def is_identity(self) -> bool:
        return self.kind == "x" and self.c == 0

    def as_dict(self) -> dict:
        return {"c": format_rational(self.c), "kind": self.kind}


def shear_candidates(limit: int = SHEAR_SEARCH_LIMIT) -> Iterator[Fraction]:
    """0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    k = 1
    produced = 1
    while produced < limit:
        yield Fraction(k)
        produced += 1
        if produced < limit:
            yield Fraction(-k)
            produced += 1
        k += 1


def find_shear(polys: Sequence[BiPoly], limit: int = SHEAR_SEARCH_LIMIT) -> Fraction:
    """
    Первая константа c, при которой все ненулевые многочлены из polys
    становятся y-регулярными после x <- x + c*y.

    Raises:
        ShearSearchError: если за limit проб константа не найдена
    """
    nonzero = [p for p in polys if not p.is_zero]
    for c in shear_candidates(limit):
        if all(p.lowest_form_at(c) != 0 for p in nonzero):
            if c != 0:
                logger.info(f"Выбран сдвиг x <- x + {format_rational(c)}*y")
            return c
    raise ShearSearchError(f"Не найдена константа сдвига среди {limit} проб")
