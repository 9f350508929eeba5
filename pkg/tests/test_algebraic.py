from fractions import Fraction

import pytest

from algebraic import (
    RealAlgebraic,
    TowerElem,
    alg_arith,
    alg_compare,
    alg_compare_real,
    alg_is_zero,
    alg_sign,
    evaluate_tower_poly,
    real_roots_of_tower_poly,
    to_decimal,
    tower_roots,
)
from algebraic.tower import _vanishes_by_last_generator
from arith import IntervalQ, upoly
from errors import DivisionByZeroError, PreconditionError


def sqrt(n: int) -> RealAlgebraic:
    return RealAlgebraic.roots_of(upoly([-n, 0, 1]))[1]


def test_roots_of_sorted_with_indices():
    minus, plus = RealAlgebraic.roots_of(upoly([-2, 0, 1]))
    assert (minus.index, plus.index) == (0, 1)
    assert minus.sign() == -1 and plus.sign() == 1
    assert minus < plus
    assert -plus == minus


def test_roots_of_mixed_factors():
    # (t - 1/2)(t^2 - 3)
    roots = RealAlgebraic.roots_of(upoly([Fraction(3, 2), -3, Fraction(-1, 2), 1]))
    assert len(roots) == 3
    assert roots[1].is_rational and roots[1].rational == Fraction(1, 2)
    assert roots == sorted(roots)


def test_rational_numbers():
    q = RealAlgebraic.from_rational(Fraction(3, 4))
    assert q.is_rational
    assert str(q) == "3/4"
    assert q.defining_text == "4*t - 3"
    assert q.to_decimal(3) == "0.750"
    assert RealAlgebraic.from_rational(0).sign() == 0


def test_equality_is_by_minimal_polynomial_and_index():
    a = RealAlgebraic.roots_of(upoly([-1, 0, 8]))[1]
    b = RealAlgebraic.from_root(upoly([Fraction(-1, 8), 0, 1]), IntervalQ(Fraction(0), Fraction(1)))
    assert a == b
    assert hash(a) == hash(b)
    assert a.defining_text == "8*t^2 - 1"


def test_from_root_reduces_to_irreducible_factor():
    # (t^2 - 2)(t - 3), отрезок вокруг sqrt(2)
    alpha = RealAlgebraic.from_root(upoly([6, -2, -3, 1]), IntervalQ(Fraction(1), Fraction(2)))
    assert alpha == sqrt(2)
    three = RealAlgebraic.from_root(upoly([6, -2, -3, 1]), IntervalQ(Fraction(5, 2), Fraction(4)))
    assert three.is_rational and three.rational == 3


def test_from_root_rejects_non_isolating_interval():
    with pytest.raises(PreconditionError):
        RealAlgebraic.from_root(upoly([-2, 0, 1]), IntervalQ(Fraction(-2), Fraction(2)))


def test_ordering_mixed():
    values = [sqrt(2), RealAlgebraic.from_rational(1), -sqrt(2), RealAlgebraic.from_rational(Fraction(3, 2))]
    assert sorted(values) == [-sqrt(2), RealAlgebraic.from_rational(1), sqrt(2), RealAlgebraic.from_rational(Fraction(3, 2))]
    assert alg_compare_real(sqrt(2), sqrt(3)) == -1
    assert alg_compare_real(sqrt(3), sqrt(3)) == 0


def test_to_decimal_rounding():
    assert sqrt(2).to_decimal(12) == "1.414213562373"
    assert (-sqrt(2)).to_decimal(12) == "-1.414213562373"
    assert sqrt(2).to_decimal(0) == "1"


def test_text_form():
    text = str(sqrt(2))
    assert text.startswith("root(t^2 - 2, [")


def test_tower_single_generator():
    a = TowerElem.of(sqrt(2))
    square = a * a
    assert square.is_rational and square.as_fraction == 2
    assert (a.inverse() * a).as_fraction == 1
    assert (a / a).as_fraction == 1
    assert alg_sign(a - 1) == 1
    assert alg_sign(a - Fraction(3, 2)) == -1
    assert (a + 1) * (a - 1) == 1


def test_tower_two_generators():
    a, b = TowerElem.of(sqrt(2)), TowerElem.of(sqrt(3))
    total = a + b
    assert total.collapse().defining_text == "t^4 - 10*t^2 + 1"
    assert to_decimal(total, 6) == "3.146264"
    assert alg_sign(a - b) == -1
    assert alg_compare(b, a) == 1
    product = a * b
    assert (product * product).as_fraction == 6
    inverse = total.inverse()
    assert inverse * total == 1
    # 1/(sqrt2 + sqrt3) = sqrt3 - sqrt2
    assert inverse == b - a


def test_zero_test_across_generators():
    a, b, c = TowerElem.of(sqrt(2)), TowerElem.of(sqrt(3)), TowerElem.of(sqrt(6))
    assert alg_is_zero(a * b - c)
    assert not alg_is_zero(a * b + c)
    assert alg_sign(a * b - c) == 0


def test_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        TowerElem.rational(0).inverse()
    a, b, c = TowerElem.of(sqrt(2)), TowerElem.of(sqrt(3)), TowerElem.of(sqrt(6))
    with pytest.raises(DivisionByZeroError):
        TowerElem.rational(1) / (a * b - c)
    with pytest.raises(ZeroDivisionError):
        a / 0


@pytest.mark.parametrize("op, expected", [("+", 5), ("-", -1), ("*", 6), ("/", Fraction(2, 3)), ("×", 6), ("÷", Fraction(2, 3))])
def test_alg_arith_rational(op, expected):
    result = alg_arith(TowerElem.rational(2), TowerElem.rational(3), op)
    assert result.as_fraction == expected


def test_alg_arith_unknown_operation():
    with pytest.raises(PreconditionError):
        alg_arith(TowerElem.rational(2), TowerElem.rational(3), "%")


def test_evaluate_tower_poly():
    a = TowerElem.of(sqrt(2))
    # t^2 - 2 в точке sqrt(2)
    value = evaluate_tower_poly([TowerElem.rational(-2), TowerElem.rational(0), TowerElem.rational(1)], a)
    assert alg_is_zero(value)


def test_real_roots_of_rational_polynomial():
    roots = real_roots_of_tower_poly([TowerElem.rational(-2), TowerElem.rational(0), TowerElem.rational(1)])
    assert roots == [-sqrt(2), sqrt(2)]


def test_real_roots_over_extension():
    a = TowerElem.of(sqrt(2))
    # t^2 - sqrt(2): корни ±2^(1/4)
    roots = real_roots_of_tower_poly([-a, TowerElem.rational(0), TowerElem.rational(1)])
    assert len(roots) == 2
    assert all(r.defining_text == "t^4 - 2" for r in roots)
    assert roots[0] == -roots[1]
    # t^2 + sqrt(2) вещественных корней не имеет
    assert real_roots_of_tower_poly([a, TowerElem.rational(0), TowerElem.rational(1)]) == []


def test_real_roots_with_algebraic_leading_coefficient():
    a = TowerElem.of(sqrt(2))
    # sqrt(2)*t - 2 = 0  =>  t = sqrt(2)
    roots = real_roots_of_tower_poly([TowerElem.rational(-2), a])
    assert roots == [sqrt(2)]


def test_inverse_with_three_generators():
    a, b, c = TowerElem.of(sqrt(2)), TowerElem.of(sqrt(3)), TowerElem.of(sqrt(5))
    total = a + b + c
    inverse = total.inverse()
    assert inverse * total == 1
    assert inverse.approximate() == pytest.approx(1 / (2**0.5 + 3**0.5 + 5**0.5), abs=1e-5)


def test_inverse_when_value_shares_factor_with_minimal_polynomial():
    # как многочлен от sqrt3 значение имеет общий корень с t^2 - 3
    a, b, c = TowerElem.of(sqrt(2)), TowerElem.of(sqrt(3)), TowerElem.of(sqrt(6))
    value = c + a * b
    assert value.inverse() * value == 1
    assert value.inverse() == c.scale(Fraction(1, 12))


def test_zero_test_by_last_generator():
    a, b, c = TowerElem.of(sqrt(2)), TowerElem.of(sqrt(3)), TowerElem.of(sqrt(6))
    assert _vanishes_by_last_generator(a * b - c)
    assert not _vanishes_by_last_generator(a * b + c)
    assert not _vanishes_by_last_generator(a * b - c + Fraction(1, 10**9))


def test_tower_roots_stay_in_the_field():
    a = TowerElem.of(sqrt(2))
    [root] = tower_roots([-a, TowerElem.rational(1)])
    assert root.gens == (sqrt(2),)
    assert root == a
    # (t - sqrt2)^2: бесквадратная часть линейна
    [double] = tower_roots([TowerElem.rational(2), a.scale(-2), TowerElem.rational(1)])
    assert double.gens == (sqrt(2),)
    assert double == a


def test_tower_roots_of_irreducible_quadratic():
    a = TowerElem.of(sqrt(2))
    roots = tower_roots([-a, TowerElem.rational(0), TowerElem.rational(1)])
    assert [r.collapse().defining_text for r in roots] == ["t^4 - 2", "t^4 - 2"]
    assert alg_sign(roots[0]) == -1 and alg_sign(roots[1]) == 1
    assert tower_roots([TowerElem.rational(5)]) == []
    assert [r.as_fraction for r in tower_roots([TowerElem.rational(-4), TowerElem.rational(0), TowerElem.rational(1)])] == [-2, 2]
