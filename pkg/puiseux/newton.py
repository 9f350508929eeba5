import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from algebraic import TowerElem, alg_is_zero, tower_roots
from bipoly import BiPoly, sound_level
from errors import NotYRegularError, PreconditionError
from logger import logger

from .branch import BranchSet, PuiseuxBranch, Side, Term

# Точка многоугольника Ньютона: (показатель x, показатель y)
Point = Tuple[Fraction, int]
Series = Dict[Point, TowerElem]


def _initial_series(f: BiPoly, side: Side) -> Series:
    source = f if side is Side.PLUS else f.reflect_x()
    return {(Fraction(i), j): TowerElem.rational(c) for (i, j), c in source}


def _is_nonzero(series: Series, point: Point) -> bool:
    return not alg_is_zero(series[point])


def _start_vertex(series: Series, slope: Fraction) -> Optional[Point]:
    """Вершина с наименьшим весом a + slope*j, при равенстве с наименьшим j."""
    for point in sorted(series, key=lambda p: (p[0] + slope * p[1], p[1])):
        if _is_nonzero(series, point):
            return point
    return None


def _next_edge(
    series: Series, vertex: Point, bound: Fraction
) -> Optional[Tuple[Fraction, List[Point]]]:
    """
    Следующее ребро нижней оболочки влево от vertex.

    Returns:
        (наклон, точки ребра по убыванию j) или None, если точек с
        меньшим j нет
    """
    a_c, j_c = vertex

    def slope_to(p: Point) -> Fraction:
        return (p[0] - a_c) / (j_c - p[1])

    lower = [(a, j) for (a, j) in series if j < j_c and a <= bound]
    ordered = sorted(lower, key=lambda p: (slope_to(p), p[1]))
    for point in ordered:
        if not _is_nonzero(series, point):
            continue
        slope = slope_to(point)
        on_edge = [
            p
            for p in ordered
            if slope_to(p) == slope and (p == point or _is_nonzero(series, p))
        ]
        return slope, [vertex] + sorted(on_edge, key=lambda p: -p[1])
    return None


def _characteristic(series: Series, edge: List[Point]) -> List[TowerElem]:
    """Коэффициенты характеристического многочлена ребра по возрастанию степени."""
    j_end = edge[-1][1]
    coeffs = [TowerElem.rational(0)] * (edge[0][1] - j_end + 1)
    for point in edge:
        coeffs[point[1] - j_end] = series[point]
    return coeffs


def _substitute(
    series: Series, c: TowerElem, slope: Fraction, bound: Fraction
) -> Series:
    """Подстановка y <- c*x^slope + y с отбрасыванием точек выше bound."""
    top = max(j for _, j in series)
    powers = [TowerElem.rational(1)]
    for _ in range(top):
        powers.append(powers[-1] * c)
    result: Series = {}
    for (a, j), coeff in series.items():
        if a > bound:
            continue
        for k in range(j + 1):
            exponent = a + slope * (j - k)
            if exponent > bound:
                continue
            term = coeff * powers[j - k] * math.comb(j, k)
            key = (exponent, k)
            result[key] = result[key] + term if key in result else term
    return {p: v for p, v in result.items() if not (v.is_rational and v.as_fraction == 0)}


def _expand_node(
    series: Series,
    terms: Tuple[Term, ...],
    slope: Fraction,
    level: Fraction,
    side: Side,
    out: List[PuiseuxBranch],
) -> None:
    vertex = _start_vertex(series, slope)
    if vertex is None:
        # тождественный ноль: любое продолжение является корнем
        out.append(PuiseuxBranch(side, terms, level, cluster=0))
        return
    bound = vertex[0] + level * vertex[1]
    while vertex[1] > 0:
        edge = _next_edge(series, vertex, bound)
        if edge is None:
            # y = 0 точный корень кратности vertex[1]
            out.append(PuiseuxBranch(side, terms, level, cluster=vertex[1]))
            return
        mu, points = edge
        if mu >= level:
            out.append(PuiseuxBranch(side, terms, level, cluster=vertex[1]))
            return
        roots = tower_roots(_characteristic(series, points))
        logger.debug(
            f"Ребро наклона {mu}: {len(points)} точек, вещественных корней {len(roots)}"
        )
        for c in roots:
            child = _substitute(series, c, mu, bound)
            _expand_node(child, terms + ((mu, c),), mu, level, side, out)
        vertex = points[-1]


def puiseux_roots(f: BiPoly, level: Fraction, side: Side) -> BranchSet:
    """
    Усечённые вещественные корни положительного порядка без проверки
    y-регулярности; для нерегулярного f ищутся только такие корни.
    """
    level = Fraction(level)
    if level <= 0:
        raise PreconditionError(f"Уровень усечения должен быть положительным: {level}")
    out: List[PuiseuxBranch] = []
    if not f.is_zero:
        _expand_node(_initial_series(f, side), (), Fraction(0), level, side, out)
    else:
        out.append(PuiseuxBranch(side, (), level, cluster=0))
    out.sort(key=lambda b: b.sort_key())
    return BranchSet(tuple(out), f, level, side)


@lru_cache(maxsize=512)
def _expand_cached(f: BiPoly, level: Fraction, side: Side) -> BranchSet:
    return puiseux_roots(f, level, side)


def expand(f: BiPoly, level, side: Side) -> BranchSet:
    """
    Множество P^side_N(f) усечённых вещественных корней Ньютона-Пюизё.

    Args:
        f: Ненулевой y-регулярный многочлен
        level: Уровень усечения N, хранятся показатели меньше N
        side: Сторона полуветвей

    Raises:
        NotYRegularError: если f не y-регулярен
    """
    if f.is_zero:
        raise PreconditionError("Разложение нулевого многочлена")
    if not f.is_y_regular():
        raise NotYRegularError(f"Многочлен {f} не y-регулярен, нужен сдвиг")
    return _expand_cached(f, Fraction(level), Side(side))


def expand_both(f: BiPoly, level) -> Tuple[BranchSet, BranchSet]:
    return expand(f, level, Side.PLUS), expand(f, level, Side.MINUS)


def separation_level(f: BiPoly) -> int:
    """
    Наименьший целый уровень M, на котором каждая вещественная усечённая
    ветвь с обеих сторон отвечает ровно одному корню; не больше
    floor(N(deg f)) + 1.

    Усечение хранит показатели строго меньше уровня, поэтому для двух
    прямых y^2 - x^2 уровень 1 даёт одно пустое усечение с кластером
    из двух корней, и ответ равен 2. Если считать уровнем разделения
    последний показатель, в котором ветви уже различаются, получится 1:
    возвращаемое значение на единицу больше при целом таком показателе.
    Для deg f = 2 то же значение 2 даёт и верхняя граница.
    """
    if not f.is_y_regular():
        raise NotYRegularError(f"Многочлен {f} не y-регулярен, нужен сдвиг")
    cap = sound_level(f.degree)
    for level in range(1, cap + 1):
        plus, minus = expand_both(f, level)
        if plus.is_separated and minus.is_separated:
            logger.debug(f"Уровень разделения {level} (граница {cap})")
            return level
    return cap
