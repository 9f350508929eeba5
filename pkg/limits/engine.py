from fractions import Fraction
from itertools import count
from typing import Iterator, Optional, Tuple

from arith import RationalLike, as_rational
from bipoly import BiPoly, Shear, coprime_part, exact_quotient, find_shear, gcd2, jacobian_det
from errors import PreconditionError, ZeroDenominatorError
from logger import logger

from .criteria import (
    has_real_branches,
    limit_F_degenerate,
    limit_zero_isolated,
    local_sign,
    range_with_details,
)
from .outcome import Diagnostics, ExtReal, LimitOutcome, RangeInterval

Point = Tuple[RationalLike, RationalLike]


def _parse_point(point: Point) -> Tuple[Fraction, Fraction]:
    try:
        a, b = point
        return as_rational(a), as_rational(b)
    except (TypeError, ValueError):
        raise PreconditionError(f"Точка должна иметь рациональные координаты: {point!r}") from None


def _directions() -> Iterator[Tuple[int, int]]:
    """(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1), ..."""
    for total in count(2):
        for p in range(1, total):
            yield p, total - p


def candidate_limit(f: BiPoly, g: BiPoly) -> Optional[Fraction]:
    """
    Единственно возможный конечный ненулевой предел при ord f = ord g.

    Берётся первое направление, где f_m и g_n не обращаются в ноль, и
    проверяется тождество f_m = L*g_n. None, если тождество не выполнено.
    """
    f_m, g_n = f.lowest_form(), g.lowest_form()
    for p, q in _directions():
        at_f, at_g = f_m.evaluate(p, q), g_n.evaluate(p, q)
        if at_f != 0 and at_g != 0:
            candidate = at_f / at_g
            break
    if not (f_m - g_n.scale(candidate)).is_zero:
        return None
    return candidate


def _sheared(polys, diagnostics: Diagnostics) -> Fraction:
    c = find_shear(polys)
    diagnostics.shear = Shear("x", c)
    return c


def _sign_at_isolated_zero(f: BiPoly, g: BiPoly, diagnostics: Diagnostics) -> LimitOutcome:
    """f(0,0) != 0, g(0,0) = 0: бесконечный предел, если нуль g изолирован."""
    c = _sheared([g], diagnostics)
    g = g.shear_x(c)
    has_branches, level = has_real_branches(g)
    diagnostics.separation_level = level
    diagnostics.isolated_zero = not has_branches
    diagnostics.route = "definite-sign"
    if has_branches:
        logger.info("Нуль знаменателя не изолирован, диапазон не вычисляется")
        return LimitOutcome.does_not_exist(None, diagnostics)
    sign = local_sign(g) * (1 if f.evaluate(0, 0) > 0 else -1)
    return LimitOutcome.infinite(sign, diagnostics)


def _criterion_route(
    f: BiPoly, g: BiPoly, jacobian: BiPoly, diagnostics: Diagnostics
) -> LimitOutcome:
    """Проверка существования без вычисления диапазона."""
    diagnostics.route = "criterion"
    m, n = f.order(), g.order()
    if m < n:
        f_branches, _ = has_real_branches(f)
        if not f_branches and limit_zero_isolated(g, f, coprime_part(jacobian, g)):
            return LimitOutcome.infinite(local_sign(f) * local_sign(g), diagnostics)
        return LimitOutcome.does_not_exist(None, diagnostics)
    candidate = Fraction(0) if m > n else candidate_limit(f, g)
    if candidate is None:
        logger.info("Младшие формы не пропорциональны, конечного предела нет")
        return LimitOutcome.does_not_exist(None, diagnostics)
    reduced = f - g.scale(candidate)
    if reduced.is_zero:
        return LimitOutcome.exists_finite(candidate, None, diagnostics)
    if limit_zero_isolated(reduced, g, coprime_part(jacobian, reduced)):
        return LimitOutcome.exists_finite(candidate, None, diagnostics)
    return LimitOutcome.does_not_exist(None, diagnostics)


def bilimit(
    f: BiPoly,
    g: BiPoly,
    point: Point = (0, 0),
    compute_range: bool = True,
) -> LimitOutcome:
    """
    Предел f/g в точке: существует ли, чему равен, и диапазон
    частичных пределов при изолированном нуле знаменателя.

    Args:
        f: Числитель
        g: Знаменатель, не равный тождественно нулю
        point: Рациональная точка (a, b)
        compute_range: Вычислять диапазон [MIN, MAX]; при False вердикт
            выносится критерием существования

    Raises:
        ZeroDenominatorError: если g = 0
        PreconditionError: если точка не рациональна
    """
    if g.is_zero:
        raise ZeroDenominatorError("Знаменатель тождественно равен нулю")
    a, b = _parse_point(point)
    f, g = f.translate(a, b), g.translate(a, b)
    diagnostics = Diagnostics()

    common = gcd2(f, g)
    if not common.is_constant:
        logger.info(f"Сокращаем общий множитель {common}")
        f, g = exact_quotient(f, common), exact_quotient(g, common)
    if f.is_zero:
        diagnostics.route = "zero-numerator"
        return LimitOutcome.exists_finite(0, None, diagnostics)

    g0 = g.evaluate(0, 0)
    if g0 != 0:
        diagnostics.route = "regular-point"
        value = f.evaluate(0, 0) / g0
        return LimitOutcome.exists_finite(
            value, RangeInterval.singleton(ExtReal.finite(value)), diagnostics
        )
    if f.evaluate(0, 0) != 0:
        return _sign_at_isolated_zero(f, g, diagnostics)

    jacobian = jacobian_det(f, g)
    c = _sheared([f, g, jacobian], diagnostics)
    f, g, jacobian = f.shear_x(c), g.shear_x(c), jacobian.shear_x(c)

    has_branches, level = has_real_branches(g)
    diagnostics.separation_level = level
    diagnostics.isolated_zero = not has_branches
    if has_branches:
        diagnostics.route = "non-isolated"
        logger.info("Нуль знаменателя не изолирован, диапазон не вычисляется")
        return LimitOutcome.does_not_exist(None, diagnostics)

    if jacobian.is_zero:
        return limit_F_degenerate(f, g, diagnostics)

    if not compute_range:
        return _criterion_route(f, g, jacobian, diagnostics)

    diagnostics.route = "range"
    interval, certified = range_with_details(f, g, coprime_part(jacobian, f))
    diagnostics.truncation_level = certified.level
    diagnostics.branch_count = len(certified.limits)
    logger.info(f"Диапазон частичных пределов: {interval}")
    if interval.is_singleton:
        if interval.min.is_finite:
            return LimitOutcome.exists_finite(interval.min.value, interval, diagnostics)
        return LimitOutcome.infinite(interval.min.sign, diagnostics)
    return LimitOutcome.does_not_exist(interval, diagnostics)
