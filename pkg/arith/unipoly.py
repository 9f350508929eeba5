from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import sympy

from errors import PreconditionError

from .interval import IntervalQ
from .rational import RationalLike, as_rational, to_sympy
from .sturm import SturmChain, horner, scaled_value, sturm_chain

# Переменная всех одномерных многочленов
T = sympy.Symbol("t")

# Одномерный многочлен над QQ; степень нулевого многочлена равна -oo
UniPoly = sympy.Poly


def upoly(coeffs: Sequence[RationalLike], gen: sympy.Symbol = T) -> UniPoly:
    """
    Строит многочлен по коэффициентам, упорядоченным по возрастанию степени.
    """
    rep = [to_sympy(c) for c in reversed(list(coeffs))] or [sympy.Integer(0)]
    return sympy.Poly.from_list(rep, gen, domain=sympy.QQ)


def upoly_from_expr(expr, gen: sympy.Symbol = T) -> UniPoly:
    return sympy.Poly(expr, gen, domain=sympy.QQ)


def coefficients(p: UniPoly) -> List[Fraction]:
    """Коэффициенты по возрастанию степени."""
    if p.is_zero:
        return []
    return [as_rational(c) for c in reversed(p.all_coeffs())]


def evaluate(p: UniPoly, point: RationalLike) -> Fraction:
    return horner([as_rational(c) for c in p.all_coeffs()], as_rational(point))


def upoly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Приведённый НОД; gcd(0, 0) = 0."""
    if p.is_zero and q.is_zero:
        return p
    g = p.gcd(q)
    return g.monic() if not g.is_zero else g


@lru_cache(maxsize=4096)
def squarefree_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), приведённый."""
    if p.is_zero:
        raise PreconditionError("Бесквадратная часть нулевого многочлена не определена")
    if p.degree() == 0:
        return upoly([1], p.gen)
    return p.sqf_part().monic()


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    return as_rational(sympy.Rational(p.resultant(q)))


def irreducible_factors(p: UniPoly) -> List[UniPoly]:
    """Различные приведённые неприводимые над QQ множители многочлена."""
    if p.is_zero:
        raise PreconditionError("Разложение нулевого многочлена не определено")
    return list(_irreducible_factors(p))


@lru_cache(maxsize=4096)
def _irreducible_factors(p: UniPoly) -> Tuple[UniPoly, ...]:
    _, factors = p.factor_list()
    return tuple(f.monic() for f, _ in factors if f.degree() > 0)


@lru_cache(maxsize=4096)
def integer_coefficients(p: UniPoly) -> Tuple[int, ...]:
    """Примитивные целые коэффициенты по убыванию степени."""
    _, p_int = p.clear_denoms(convert=True)
    return tuple(int(c) for c in p_int.all_coeffs())


def chain_for(p: UniPoly) -> SturmChain:
    return sturm_chain(integer_coefficients(squarefree_part(p)))


def cauchy_bound(p: UniPoly) -> Fraction:
    """Все корни p лежат строго внутри (-B, B)."""
    coeffs = coefficients(p)
    lead = abs(coeffs[-1])
    return 1 + max((abs(c) / lead for c in coeffs[:-1]), default=Fraction(0))


def count_real_roots(p: UniPoly, interval: Optional[IntervalQ] = None) -> int:
    """
    Точное число различных вещественных корней в открытом интервале.

    Args:
        p: Ненулевой многочлен
        interval: Интервал (lo, hi); None означает всю прямую
    """
    if p.is_zero:
        raise PreconditionError("Подсчёт корней нулевого многочлена")
    if p.degree() == 0:
        return 0
    chain = chain_for(p)
    if interval is None:
        return chain.count_open(None, None)
    if interval.is_point:
        return 0
    return chain.count_open(interval.lo, interval.hi)


def isolate_real_roots(p: UniPoly) -> List[IntervalQ]:
    """
    Изолирует вещественные корни бисекцией со счётом по Штурму.

    Returns:
        Попарно непересекающиеся отрезки по возрастанию, каждый содержит
        ровно один корень p; рациональный корень может вернуться точкой
    """
    if p.is_zero:
        raise PreconditionError("Изоляция корней нулевого многочлена")
    if p.degree() == 0:
        return []
    chain = chain_for(p)
    bound = cauchy_bound(p)
    result: List[IntervalQ] = []
    stack = [(-bound, bound, chain.count_open(-bound, bound))]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1 and not chain.is_root(lo) and not chain.is_root(hi):
            result.append(IntervalQ(lo, hi))
            continue
        mid = (lo + hi) / 2
        at_mid = chain.is_root(mid)
        if at_mid:
            result.append(IntervalQ.point(mid))
        left = chain.count_open(lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, count - left - int(at_mid)))
    result.sort(key=lambda iv: iv.lo)
    return result


def bisect_root(p: UniPoly, interval: IntervalQ) -> IntervalQ:
    """Один шаг уточнения изолирующего отрезка простого корня."""
    if interval.is_point:
        return interval
    coeffs = integer_coefficients(p)
    mid = interval.midpoint
    at_mid = scaled_value(coeffs, mid)
    if at_mid == 0:
        return IntervalQ.point(mid)
    at_lo = scaled_value(coeffs, interval.lo)
    if at_lo == 0:
        # корень на левом конце отрезка
        return IntervalQ.point(interval.lo)
    if (at_lo > 0) != (at_mid > 0):
        return IntervalQ(interval.lo, mid)
    return IntervalQ(mid, interval.hi)


def refine_root(p: UniPoly, interval: IntervalQ, width: Fraction) -> IntervalQ:
    """Сужает изолирующий отрезок до ширины не больше width."""
    while interval.width > width:
        interval = bisect_root(p, interval)
    return interval
