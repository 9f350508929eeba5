import random
from fractions import Fraction

import numpy as np
import pytest

from algebraic import RealAlgebraic, TowerElem
from arith import upoly
from bipoly import BiPoly, sound_level, squarefree, squarefree_regularize, truncation_bound
from cli import parse_poly as poly
from errors import NotYRegularError, PreconditionError
from puiseux import (
    Side,
    expand,
    expand_both,
    extend_branch,
    generic_order,
    leading_term,
    member,
    multiplicity,
    multiplicity_by_derivatives,
    puiseux_roots,
    separation_level,
    substitute_order,
)


def texts(branches):
    return [b.text() for b in branches]


def test_cusp_has_two_right_branches():
    plus = expand(poly("y^2 - x^3"), 2, Side.PLUS)
    assert texts(plus) == ["y = -x^(3/2) + O(x^2)", "y = x^(3/2) + O(x^2)"]
    assert all(b.ramification == 2 for b in plus)
    assert plus.is_separated
    assert expand(poly("y^2 - x^3"), 2, Side.MINUS).is_empty


def test_low_level_merges_branches_into_one_cluster():
    plus = expand(poly("y^2 - x^3"), 1, Side.PLUS)
    assert len(plus) == 1
    assert plus.branches[0].cluster == 2
    assert not plus.is_separated
    assert plus.branches[0].text() == "y = O(x^1)"


def test_two_lines_on_both_sides():
    plus, minus = expand_both(poly("y^2 - x^2"), 4)
    assert texts(plus) == ["y = -x + O(x^4)", "y = x + O(x^4)"]
    assert texts(minus) == ["y = -(-x) + O(x^4)", "y = (-x) + O(x^4)"]


def test_isolated_point_has_no_real_branches():
    plus, minus = expand_both(poly("x^2 + y^2"), 3)
    assert plus.is_empty and minus.is_empty


def test_exact_root_on_axis():
    plus = expand(poly("y*(y - x^2)"), 3, Side.PLUS)
    assert texts(plus) == ["y = O(x^3)", "y = x^2 + O(x^3)"]
    assert [b.exponents for b in plus] == [(), (Fraction(2),)]


def test_algebraic_coefficients():
    plus = expand(poly("y^2 - 2*x^2"), 2, Side.PLUS)
    assert len(plus) == 2
    sqrt2 = RealAlgebraic.roots_of(upoly([-2, 0, 1]))[1]
    upper = plus.branches[1]
    assert upper.terms[0][1] == TowerElem.of(sqrt2)
    assert upper.text().startswith("y = root(t^2 - 2, [")


def test_nonzero_at_origin_has_no_branches():
    assert expand(poly("1 + x + y"), 3, Side.PLUS).is_empty


def test_zero_polynomial_in_puiseux_roots():
    roots = puiseux_roots(BiPoly(), 2, Side.PLUS)
    assert len(roots) == 1
    assert roots.branches[0].cluster == 0


def test_expand_preconditions():
    with pytest.raises(PreconditionError):
        expand(BiPoly(), 2, Side.PLUS)
    with pytest.raises(NotYRegularError):
        expand(poly("x*y"), 2, Side.PLUS)
    with pytest.raises(PreconditionError):
        puiseux_roots(poly("y"), 0, Side.PLUS)


@pytest.mark.parametrize(
    "text, level",
    [
        ("y^2 - x^3", 2),
        ("y^2 - x^2", 2),
        ("x^2 + y^2", 2),
        ("y", 1),
        ("y*(y - x^2)", 3),
    ],
)
def test_separation_level(text, level):
    assert separation_level(poly(text)) == level


def test_truncated_and_extended_branches():
    f = poly("y*(y - x^2) - x^5")
    high = expand(f, 4, Side.PLUS)
    for branch in high:
        low = branch.truncated(3)
        assert low.truncation == 3
        assert member(f, low)
        assert extend_branch(f, low, 4).same_series(branch)
    with pytest.raises(PreconditionError):
        extend_branch(f, expand(poly("y - x"), 2, Side.PLUS).branches[0], 4)


@pytest.mark.parametrize(
    "f_text, regularized_by, level",
    [
        ("y^2 - x^3", 1, 2),
        ("y^2 - x^2", 2, 2),
    ],
)
def test_squarefree_regularization_keeps_truncations(f_text, regularized_by, level):
    f = poly(f_text)
    g = squarefree_regularize(f, level, regularized_by)
    for side in Side:
        original, regular = expand(f, level, side), expand(g, level, side)
        assert len(original) == len(regular)
        assert all(regular.contains(b) for b in original)


def test_orders_along_branches():
    line = expand(poly("y^2 - x^2"), 2, Side.PLUS).branches[1]
    lead = substitute_order(poly("x^2 + y^2"), line)
    assert lead.order == 2
    assert lead.leading_coeff == 2
    assert lead.sign == 1
    assert substitute_order(poly("y^2 - x^2"), line).is_infinite

    sqrt_line = expand(poly("y^2 - 2*x^2"), 2, Side.PLUS).branches[0]
    lead = substitute_order(poly("y"), sqrt_line)
    assert lead.order == 1
    assert lead.sign == -1

    # вдоль оси y = 0 (пустой ряд) порядок даёт младшая степень f(x, 0)
    assert leading_term(poly("x^3 + x^2*y"), (), Side.PLUS).order == 3
    assert leading_term(poly("y"), (), Side.PLUS).is_infinite


def test_minus_side_orders_use_reflected_variable():
    # f = x вдоль левой полуоси: f(-t, 0) = -t
    lead = leading_term(poly("x"), (), Side.MINUS)
    assert lead.order == 1
    assert lead.sign == -1


def test_generic_order():
    # f(x, x + c*x^2) = c*x^2 для f = y - x
    terms = ((Fraction(1), TowerElem.rational(1)),)
    assert generic_order(poly("y - x"), terms, 2, Side.PLUS) == 2


def test_multiplicity_two_ways():
    f = poly("(y - x)^2 * (y + x)")
    minus_line, line = expand(f, 2, Side.PLUS)
    assert line.cluster == 2
    assert multiplicity(f, line, 2) == 2
    assert multiplicity(f, minus_line, 2) == 1
    assert multiplicity_by_derivatives(f, line) == 2
    assert multiplicity_by_derivatives(f, minus_line) == 1


@pytest.mark.parametrize(
    "text, mult",
    [
        ("(y - x)^3", 3),
        ("(y - x^2)^4 * (y + x)", 4),
        ("(y^2 - x^3)^2", 2),
    ],
)
def test_multiplicity_agreement(text, mult):
    f = poly(text)
    for branch in expand(f, 3, Side.PLUS):
        expected = multiplicity_by_derivatives(f, branch)
        assert multiplicity(f, branch, 3) == expected
    top = max(multiplicity_by_derivatives(f, b) for b in expand(f, 3, Side.PLUS))
    assert top == mult


def test_multiplicity_rejects_foreign_branch():
    branch = expand(poly("y - x"), 2, Side.PLUS).branches[0]
    with pytest.raises(PreconditionError):
        multiplicity(poly("y + x"), branch, 2)


@pytest.mark.parametrize(
    "text, level",
    [
        ("y^2 - x^3", 3),
        ("y^2 - 2*x^2 - x^3", 4),
        ("y*(y - x^2) - x^5", 4),
        ("y^3 - x^2*y - x^4", 4),
    ],
)
def test_branches_match_numeric_roots(text, level):
    f = poly(text)
    x0 = 1e-3
    branches = expand(f, level, Side.PLUS)
    values = sorted(
        sum(float(c.approximate(Fraction(1, 10**15))) * x0 ** float(e) for e, c in branch.terms)
        for branch in branches
    )
    coeffs = [
        float(sum(c * Fraction(x0) ** i for (i, j), c in f if j == k))
        for k in range(f.degree_y, -1, -1)
    ]
    numeric = sorted(r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-12)
    assert len(values) == len(numeric)
    tolerance = x0**level * 1e3
    for value, root in zip(values, numeric):
        assert abs(value - root) <= tolerance


# Первые QUICK экземпляров каждого случайного набора идут в обычном прогоне,
# остальные только с -m slow
QUICK = 10


def seeds(size: int):
    return [seed if seed < QUICK else pytest.param(seed, marks=pytest.mark.slow) for seed in range(size)]


def random_curve(seed: int, max_degree: int, squarefree_only: bool = False) -> BiPoly:
    """y-регулярный многочлен с f(0, 0) = 0 и небольшими целыми коэффициентами."""
    rng = random.Random(seed)
    while True:
        m = rng.randint(1, min(3, max_degree))
        top = rng.randint(m, max_degree)
        f = BiPoly.monomial(0, m, rng.choice([-1, 1]))
        for _ in range(rng.randint(1, 4)):
            total = rng.randint(m, top)
            i = rng.randint(1, total)
            f = f + BiPoly.monomial(i, total - i, rng.choice([-3, -2, -1, 1, 2, 3]))
        if not f.is_y_regular():
            continue
        if squarefree_only and squarefree(f).degree != f.degree:
            continue
        return f


def random_branch_product(seed: int) -> BiPoly:
    """Произведение множителей y - a*x^p и y^2 - a*x^p с известными корнями."""
    rng = random.Random(seed)
    while True:
        f = BiPoly.constant(1)
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.5:
                a, p = rng.choice([-2, -1, 1, 2]), rng.randint(1, 3)
                f = f * (BiPoly.y() - BiPoly.monomial(p, 0, a))
            else:
                a, p = rng.choice([-2, -1, 1, 2, 3]), rng.randint(2, 3)
                f = f * (BiPoly.y() ** 2 - BiPoly.monomial(p, 0, a))
        if squarefree(f).degree == f.degree:
            return f


def first_difference(a, b) -> Fraction:
    """Показатель первого члена, в котором расходятся два разных усечения."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        if ea != eb:
            return min(ea, eb)
        if not (ca == cb):
            return ea
    longer = a.terms if len(a.terms) > len(b.terms) else b.terms
    return longer[min(len(a.terms), len(b.terms))][0]


@pytest.mark.parametrize("seed", seeds(100))
def test_regularization_keeps_truncations_of_random_curves(seed):
    f = random_curve(seed, 6)
    m = f.order()
    level = f.degree // m + 1
    for c in (1, 2):
        g = squarefree_regularize(f, level, c)
        for side in Side:
            original, regular = expand(f, level, side), expand(g, level, side)
            assert len(original) == len(regular)
            assert all(regular.contains(b) for b in original)


@pytest.mark.parametrize("seed", seeds(100))
def test_truncations_of_squarefree_curves_are_distinct(seed):
    f = random_curve(seed, 5, squarefree_only=True)
    bound = truncation_bound(f.degree)
    level = sound_level(f.degree)
    for side in Side:
        branches = list(expand(f, level, side))
        assert all(b.is_separated for b in branches)
        for k, a in enumerate(branches):
            for b in branches[k + 1 :]:
                assert not a.same_series(b)
                assert first_difference(a, b) <= bound


@pytest.mark.parametrize("seed", seeds(50))
def test_random_branches_match_numeric_roots(seed):
    f = random_branch_product(seed)
    level = separation_level(f)
    x0 = 1e-3
    branches = expand(f, level, Side.PLUS)
    assert branches.is_separated
    values = sorted(
        sum(float(c.approximate(Fraction(1, 10**15))) * x0 ** float(e) for e, c in branch.terms)
        for branch in branches
    )
    coeffs = [
        float(sum(c * Fraction(x0) ** i for (i, j), c in f if j == k))
        for k in range(f.degree_y, -1, -1)
    ]
    numeric = sorted(r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-12)
    assert len(values) == len(numeric)
    tolerance = x0**level * 1e3
    for value, root in zip(values, numeric):
        assert abs(value - root) <= tolerance


# кратный множитель и взаимно простой с ним спутник
MULTIPLICITY_SUITE = [
    (f"({base})^{mult}{companion}", mult)
    for base, companion in [
        ("y - x", " * (y + 3*x)"),
        ("y^2 - 2*x^2", " * (y + 3*x)"),
        ("y + x^2", " * (y + 3*x)"),
        ("y - x - x^2", " * (y + 3*x)"),
        ("y^2 - x^3", ""),
    ]
    for mult in range(1, 5)
]


@pytest.mark.parametrize("text, mult", MULTIPLICITY_SUITE)
def test_multiplicity_agreement_on_constructed_suite(text, mult):
    f = poly(text)
    branches = expand(f, 3, Side.PLUS)
    for branch in branches:
        assert multiplicity(f, branch, 3) == multiplicity_by_derivatives(f, branch)
    assert max(multiplicity_by_derivatives(f, b) for b in branches) == mult


def test_two_lines_separate_one_level_above_their_distinguishing_exponent():
    f = poly("y^2 - x^2")
    [merged] = expand(f, 1, Side.PLUS)
    assert merged.cluster == 2 and merged.terms == ()
    assert expand(f, 2, Side.PLUS).is_separated
    assert separation_level(f) == sound_level(f.degree) == 2
