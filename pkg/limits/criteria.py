import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import List, Optional, Tuple

from algebraic import TowerElem, alg_sign
from bipoly import (
    BiPoly,
    Shear,
    coprime_part,
    find_shear,
    gcd2,
    jacobian_det,
    shear_candidates,
    squarefree,
    tangency_poly,
)
from config import MAX_TRUNCATION, SHEAR_SEARCH_LIMIT
from errors import PreconditionError, ShearSearchError
from logger import logger
from puiseux import (
    PuiseuxBranch,
    SeriesLeading,
    expand_both,
    generic_order,
    separation_level,
    substitute_order,
)

from .outcome import BranchLimit, Diagnostics, ExtReal, LimitOutcome, RangeInterval


@dataclass
class CertifiedLimits:
    """Пределы вдоль всех вещественных полуветвей кривой на достаточном уровне."""

    limits: List[BranchLimit]
    separation: int
    level: int


def _value_from_orders(lead_f: SeriesLeading, lead_g: SeriesLeading) -> ExtReal:
    if lead_f.is_infinite or lead_f.order > lead_g.order:
        return ExtReal.finite(0)
    ratio = lead_f.leading_coeff / lead_g.leading_coeff
    if lead_f.order == lead_g.order:
        return ExtReal.finite(ratio.collapse())
    return ExtReal.infinite(alg_sign(ratio))


def branch_limit(f: BiPoly, g: BiPoly, branch: PuiseuxBranch) -> BranchLimit:
    """
    Предел f/g вдоль полуветви: 0, отношение старших коэффициентов или
    бесконечность со знаком этого отношения.

    Raises:
        PreconditionError: если ветвь лежит на g
    """
    lead_g = substitute_order(g, branch)
    if lead_g.is_infinite:
        raise PreconditionError(f"Ветвь {branch} лежит на знаменателе")
    lead_f = substitute_order(f, branch)
    return BranchLimit(branch, _value_from_orders(lead_f, lead_g), lead_f.order, lead_g.order)


def certified_limits(f: BiPoly, g: BiPoly, curve: BiPoly) -> CertifiedLimits:
    """
    Пределы f/g вдоль вещественных полуветвей curve.

    Уровень начинается с уровня разделения curve и поднимается, пока
    порядок g вдоль каждой усечённой ветви не станет меньше уровня:
    тогда он совпадает с порядком вдоль полной ветви.
    """
    if curve.is_constant:
        return CertifiedLimits([], 1, 1)
    separation = separation_level(curve)
    level = separation
    while True:
        plus, minus = expand_both(curve, level)
        limits: List[BranchLimit] = []
        needed: Optional[int] = None
        for branch in chain(plus, minus):
            lead_g = substitute_order(g, branch)
            if lead_g.is_infinite or lead_g.order >= level:
                needed = (
                    2 * level
                    if lead_g.is_infinite
                    else max(2 * level, math.floor(lead_g.order) + 1)
                )
                break
            lead_f = substitute_order(f, branch)
            value = _value_from_orders(lead_f, lead_g)
            limits.append(BranchLimit(branch, value, lead_f.order, lead_g.order))
        if needed is None:
            logger.info(
                f"Ветвей кривой: {len(limits)}, уровень разделения {separation}, "
                f"уровень усечения {level}"
            )
            return CertifiedLimits(limits, separation, level)
        if needed > MAX_TRUNCATION:
            raise PreconditionError(
                f"Уровень усечения {needed} превышает MAX_TRUNCATION={MAX_TRUNCATION}"
            )
        logger.debug(f"Порядок знаменателя не подтверждён, уровень {level} -> {needed}")
        level = needed


def _regular_frame(f: BiPoly, g: BiPoly, curve: BiPoly) -> Tuple[BiPoly, BiPoly, BiPoly]:
    """Общий сдвиг x <- x + c*y, после которого f, g и curve y-регулярны."""
    c = find_shear([f, g, curve])
    if c == 0:
        return f, g, curve
    return f.shear_x(c), g.shear_x(c), curve.shear_x(c)


def has_real_branches(p: BiPoly) -> Tuple[bool, int]:
    """
    Есть ли у y-регулярного p вещественные полуветви через начало координат.

    Returns:
        (ответ, уровень разделения бесквадратной части)
    """
    if p.is_zero:
        raise PreconditionError("Ветви нулевого многочлена")
    if p.evaluate(0, 0) != 0:
        return False, 0
    reduced = squarefree(p)
    level = separation_level(reduced)
    plus, minus = expand_both(reduced, level)
    return not (plus.is_empty and minus.is_empty), level


def isolated_zero_test(g: BiPoly) -> bool:
    """Начало координат является изолированным вещественным нулём g."""
    has_branches, _ = has_real_branches(g)
    return not has_branches


def local_sign(p: BiPoly) -> int:
    """
    Знак p вблизи изолированного нуля (или в точке, где p не ноль):
    знак младшего коэффициента p(0, y).
    """
    axis = p.on_y_axis()
    if axis.is_zero:
        raise PreconditionError(f"Многочлен {p} тождественно равен нулю на оси y")
    lowest = next(c for c in reversed(axis.all_coeffs()) if c != 0)
    return 1 if lowest > 0 else -1


def axis_leading(p: BiPoly) -> SeriesLeading:
    """Порядок и младший коэффициент p(0, y) при y -> 0+."""
    axis = p.on_y_axis()
    if axis.is_zero:
        return SeriesLeading.infinite()
    coeffs = list(reversed(axis.all_coeffs()))
    k = next(i for i, c in enumerate(coeffs) if c != 0)
    return SeriesLeading(Fraction(k), TowerElem.rational(coeffs[k]))


def limit_zero_isolated(f: BiPoly, g: BiPoly, curve: Optional[BiPoly] = None) -> bool:
    """
    Равен ли нулю предел f/g при изолированном нуле g и F_{f,g} != 0.

    Для каждой полуветви из P(F) без P(f) порядок f должен строго
    превосходить порядок g.
    """
    if f.is_zero:
        return True
    if curve is None:
        curve = coprime_part(jacobian_det(f, g), f)
    f, g, curve = _regular_frame(f, g, curve)
    certified = certified_limits(f, g, curve)
    return all(
        item.value.is_finite and item.value.sign == 0 for item in certified.limits
    )


def limit_F_degenerate(
    f: BiPoly, g: BiPoly, diagnostics: Optional[Diagnostics] = None
) -> LimitOutcome:
    """
    Случай F_{f,g} = 0: предел равен пределу вдоль оси y при y -> 0+.
    """
    diagnostics = diagnostics or Diagnostics()
    diagnostics.route = diagnostics.route or "jacobian-degenerate"
    value = _value_from_orders(axis_leading(f), axis_leading(g))
    if value.is_finite:
        return LimitOutcome.exists_finite(
            value.value, RangeInterval.singleton(value), diagnostics
        )
    return LimitOutcome.infinite(value.sign, diagnostics)


def range_isolated(f: BiPoly, g: BiPoly, curve: Optional[BiPoly] = None) -> RangeInterval:
    """
    [MIN, MAX] частичных пределов при изолированном нуле g.

    Кандидаты: пределы вдоль полуветвей P(F) без P(f) и ноль, если у f
    есть вещественные ветви.
    """
    interval, _ = range_with_details(f, g, curve)
    return interval


def range_with_details(
    f: BiPoly, g: BiPoly, curve: Optional[BiPoly] = None
) -> Tuple[RangeInterval, CertifiedLimits]:
    if curve is None:
        curve = coprime_part(jacobian_det(f, g), f)
    f, g, curve = _regular_frame(f, g, curve)
    certified = certified_limits(f, g, curve)
    candidates = [item.value for item in certified.limits]
    f_has_branches, _ = has_real_branches(f)
    if f_has_branches:
        candidates.append(ExtReal.finite(0))
    if not candidates:
        raise PreconditionError("Нет кандидатов для диапазона: у F нет вещественных ветвей")
    for item in certified.limits:
        logger.debug(f"Ветвь {item.branch}: предел {item.value}")
    return RangeInterval(min(candidates), max(candidates)), certified


def general_coordinates(f: BiPoly, g: BiPoly) -> Tuple[BiPoly, BiPoly, BiPoly, Shear]:
    """
    Сдвиг, после которого f, g и G_{f,g} y-регулярны.

    Сначала перебираются сдвиги x <- x + c*y, затем y <- x + y.

    Raises:
        ShearSearchError: если подходящий сдвиг не найден
    """
    options = [Shear("x", c) for c in shear_candidates(SHEAR_SEARCH_LIMIT)] + [Shear("y", Fraction(1))]
    for shear in options:
        fs, gs = shear.apply(f), shear.apply(g)
        if not (fs.is_y_regular() and gs.is_y_regular()):
            continue
        tangency = tangency_poly(fs, gs)
        if tangency.is_zero or tangency.is_y_regular():
            if not shear.is_identity:
                logger.info(f"Общий случай: сдвиг {shear.kind} c={shear.c}")
            return fs, gs, tangency, shear
    raise ShearSearchError("Не найден сдвиг, делающий f, g и G y-регулярными")


def exists_zero_general(f: BiPoly, g: BiPoly) -> bool:
    """
    Равен ли нулю предел f/g без предположения об изолированности нуля g.

    Проверяются три условия: ord f > ord g; порядки вдоль ветвей G вне
    f и g; кратности и порядки при общем возмущении вдоль ветвей g.
    """
    if g.is_zero:
        raise PreconditionError("Знаменатель тождественно равен нулю")
    if f.is_zero:
        return True
    if f.order() <= g.order():
        return False
    f, g, tangency, _ = general_coordinates(f, g)
    if tangency.is_zero:
        return True

    only_g = coprime_part(g, f)
    if not only_g.is_constant and has_real_branches(only_g)[0]:
        logger.debug("У g есть вещественная ветвь, не лежащая на f")
        return False

    shared = squarefree(gcd2(g, f))
    if not shared.is_constant and has_real_branches(shared)[0]:
        level = separation_level(squarefree(f * g))
        plus, minus = expand_both(shared, level + 1)
        for branch in chain(plus, minus):
            lower = branch.truncated(level)
            order_f = generic_order(f, lower.terms, level, branch.side)
            order_g = generic_order(g, lower.terms, level, branch.side)
            mult_f = generic_order(f, branch.terms, level + 1, branch.side) - order_f
            mult_g = generic_order(g, branch.terms, level + 1, branch.side) - order_g
            if mult_f < mult_g:
                return False
            if mult_f == mult_g and not order_f > order_g:
                return False

    curve = coprime_part(tangency, f * g)
    certified = certified_limits(f, g, curve)
    return all(
        item.value.is_finite and item.value.sign == 0 for item in certified.limits
    )
