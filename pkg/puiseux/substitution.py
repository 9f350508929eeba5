from fractions import Fraction
from typing import Dict, List, Sequence

from algebraic import TowerElem, alg_is_zero
from bipoly import INFINITY, BiPoly
from errors import PreconditionError

from .branch import PuiseuxBranch, SeriesLeading, Side, Term
from .newton import puiseux_roots

FractionalSeries = Dict[Fraction, TowerElem]


def _multiply(a: FractionalSeries, b: FractionalSeries, cutoff: Fraction) -> FractionalSeries:
    result: FractionalSeries = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = ea + eb
            if e >= cutoff:
                continue
            term = va * vb
            result[e] = result[e] + term if e in result else term
    return result


def _series_mod(
    source: BiPoly, terms: Sequence[Term], cutoff: Fraction
) -> FractionalSeries:
    """f(t, phi(t)) по модулю t^cutoff."""
    phi: FractionalSeries = {e: c for e, c in terms if e < cutoff}
    e_min = terms[0][0]
    powers: List[FractionalSeries] = [{Fraction(0): TowerElem.rational(1)}]
    for _ in range(source.degree_y):
        powers.append(_multiply(powers[-1], phi, cutoff))
    result: FractionalSeries = {}
    for (i, j), c in source:
        if i + j * e_min >= cutoff:
            continue
        for e, v in powers[j].items():
            exponent = i + e
            if exponent >= cutoff:
                continue
            term = v.scale(c)
            result[exponent] = result[exponent] + term if exponent in result else term
    return result


def leading_term(f: BiPoly, terms: Sequence[Term], side: Side) -> SeriesLeading:
    """
    Порядок и старший коэффициент t -> f(±t, phi(t)).

    Ряд считается по модулю t^cutoff с удвоением запаса, пока не найдётся
    ненулевой член или cutoff не превысит наибольший возможный показатель.
    """
    source = f if side is Side.PLUS else f.reflect_x()
    if source.is_zero:
        return SeriesLeading.infinite()
    terms = list(terms)
    if not terms:
        on_axis = [(i, c) for (i, j), c in source if j == 0]
        if not on_axis:
            return SeriesLeading.infinite()
        i, c = min(on_axis)
        return SeriesLeading(Fraction(i), TowerElem.rational(c))
    e_min, e_max = terms[0][0], terms[-1][0]
    lowest = min(i + j * e_min for (i, j), _ in source)
    highest = max(i + j * e_max for (i, j), _ in source)
    width = Fraction(2)
    while True:
        cutoff = lowest + width
        series = _series_mod(source, terms, cutoff)
        for exponent in sorted(series):
            if not alg_is_zero(series[exponent]):
                return SeriesLeading(exponent, series[exponent])
        if cutoff > highest:
            return SeriesLeading.infinite()
        width *= 2


def substitute_order(f: BiPoly, branch: PuiseuxBranch) -> SeriesLeading:
    """Порядок и старший коэффициент f вдоль усечённой ветви."""
    return leading_term(f, branch.terms, branch.side)


def generic_order(f: BiPoly, terms: Sequence[Term], level: Fraction, side: Side):
    """
    ord f(x, phi + c*x^level) для общего c.

    Плохих значений c не больше deg_y f, поэтому минимум по deg_y f + 1
    различным c достигается на общем значении.
    """
    level = Fraction(level)
    best = INFINITY
    for c in range(1, f.degree_y + 2):
        trial = tuple(terms) + ((level, TowerElem.rational(c)),)
        best = min(best, leading_term(f, trial, side).order)
    return best


def member(f: BiPoly, branch: PuiseuxBranch) -> bool:
    """Совпадает ли усечённая ветвь с усечением какого-либо корня f."""
    if f.is_zero:
        return True
    return puiseux_roots(f, branch.truncation, branch.side).contains(branch)


def extend_branch(f: BiPoly, branch: PuiseuxBranch, level: Fraction) -> PuiseuxBranch:
    """
    Усечение уровня level того корня f, который продолжает branch.

    Raises:
        PreconditionError: если ветвь не лежит на f
    """
    level = Fraction(level)
    if level <= branch.truncation:
        return branch.truncated(level)
    for candidate in puiseux_roots(f, level, branch.side):
        if candidate.truncated(branch.truncation).same_series(branch):
            return candidate
    raise PreconditionError(f"Ветвь {branch} не продолжается корнем многочлена {f}")


def multiplicity(f: BiPoly, branch: PuiseuxBranch, level: int) -> int:
    """
    Кратность корня: ord f(x, phi_{N+1} + c*x^(N+1)) - ord f(x, phi_N + c*x^N).

    Raises:
        PreconditionError: если ветвь не лежит на f
    """
    if not member(f, branch):
        raise PreconditionError(f"Ветвь {branch} не лежит на {f}")
    level = Fraction(level)
    lower = extend_branch(f, branch, level)
    upper = extend_branch(f, branch, level + 1)
    jump = generic_order(f, upper.terms, level + 1, branch.side) - generic_order(
        f, lower.terms, level, branch.side
    )
    return int(jump)


def multiplicity_by_derivatives(f: BiPoly, branch: PuiseuxBranch) -> int:
    """
    Наименьшее p, при котором ветвь не лежит на d^p f / dy^p.

    Raises:
        PreconditionError: если ветвь не лежит на f
    """
    if not member(f, branch):
        raise PreconditionError(f"Ветвь {branch} не лежит на {f}")
    p = 1
    while p <= f.degree_y and member(f.diff_y(p), branch):
        p += 1
    return p

