from fractions import Fraction

import pytest
import sympy

from bipoly import (
    INFINITY,
    BiPoly,
    Shear,
    X,
    Y,
    coprime_part,
    exact_quotient,
    find_shear,
    gcd2,
    jacobian_det,
    normalize,
    shear_candidates,
    sound_level,
    squarefree,
    squarefree_regularize,
    tangency_poly,
    truncation_bound,
)
from cli import parse_poly as poly
from errors import NotYRegularError, PreconditionError, ShearSearchError

x, y = BiPoly.x(), BiPoly.y()


def test_text_form_is_graded_lex_descending():
    f = y * y + x**4 + x * x * y
    assert str(f) == "x^4 + x^2*y + y^2"
    assert str(BiPoly()) == "0"
    assert str(x * y.scale(-3) + Fraction(1, 2)) == "-3*x*y + 1/2"
    assert str(-(x - y) ** 2) == "-x^2 + 2*x*y - y^2"


def test_zero_cancels_and_is_not_stored():
    f = x + y - x
    assert f == y
    assert len(f) == 1
    assert (x - x).is_zero


def test_degree_and_order():
    f = poly("x^4 + x^2*y + y^2")
    assert f.degree == 4
    assert f.order() == 2
    assert (f.degree_x, f.degree_y) == (4, 2)
    assert f.lowest_form() == y * y
    assert BiPoly().order() == INFINITY
    assert BiPoly().degree == -INFINITY


@pytest.mark.parametrize(
    "text, regular",
    [
        ("x^2 + y^2", True),
        ("x*y", False),
        ("x*y + y^2", True),
        ("x^4 + x^2*y + y^2", True),
        ("x", False),
        ("3", True),
    ],
)
def test_is_y_regular(text, regular):
    assert poly(text).is_y_regular() is regular


def test_is_y_regular_of_zero_is_an_error():
    with pytest.raises(PreconditionError):
        BiPoly().is_y_regular()


def test_lowest_form_at():
    f = poly("x*y + y^2 + x^3")
    assert f.lowest_form_at(0) == 1
    assert f.lowest_form_at(-1) == 0
    assert f.lowest_form_at(2) == 3


def test_sympy_round_trip():
    f = poly("x^3 - 2/3*x*y + 5")
    assert BiPoly.from_sympy(f.to_sympy()) == f
    assert BiPoly.from_sympy(X**2 - Y) == x * x - y


def test_coordinate_changes():
    assert (x * y).shear_x(1) == x * y + y * y
    assert (x * y).translate(1, 2) == x * y + x.scale(2) + y + 2
    assert poly("x^3 + y").reflect_x() == poly("-x^3 + y")
    assert (x * y).shear_y() == x * x + x * y


def test_evaluate_and_derivatives():
    f = poly("x^2*y^3 - 4*x + 1")
    assert f.evaluate(1, 2) == 5
    assert f.diff_x() == poly("2*x*y^3 - 4")
    assert f.diff_y(2) == poly("6*x^2*y")
    assert f.on_y_axis().as_expr() == 1
    assert poly("x + y^2").on_y_axis().as_expr() == sympy.Symbol("t") ** 2


def test_jacobian_and_tangency():
    assert jacobian_det(x, y) == BiPoly.constant(1)
    f, g = poly("x^2 + y^2"), poly("x*y")
    # f_x*g_y - f_y*g_x = 2x*x - 2y*y
    assert jacobian_det(f, g) == poly("2*x^2 - 2*y^2")
    assert tangency_poly(x, y) == poly("x^2 + y^2")


def test_normalize():
    assert normalize(poly("-2/3*x - 4/3*y")) == poly("x + 2*y")
    assert normalize(BiPoly()).is_zero


def test_gcd_and_squarefree():
    a = poly("(x + y)*(x - y)")
    b = poly("(x + y)^2")
    assert gcd2(a, b) == poly("x + y")
    assert gcd2(BiPoly(), b) == normalize(b)
    assert squarefree(poly("(x + y)^2 * x")) == poly("x^2 + x*y")
    assert squarefree(BiPoly.constant(7)) == BiPoly.constant(1)
    assert coprime_part(poly("(x + y)^2 * (x - y)"), poly("x + y")) == poly("x - y")


def test_exact_quotient():
    assert exact_quotient(poly("x^2 - y^2"), poly("x - y")) == poly("x + y")
    with pytest.raises(PreconditionError):
        exact_quotient(poly("x^2 + y"), poly("x - y"))
    with pytest.raises(PreconditionError):
        exact_quotient(x, BiPoly())


def test_truncation_bounds():
    assert truncation_bound(3) == Fraction(5, 2)
    assert sound_level(3) == 3
    assert truncation_bound(1) == Fraction(1, 2)
    assert sound_level(1) == 1
    assert sound_level(4) == 6
    with pytest.raises(PreconditionError):
        truncation_bound(0)


def test_shear_search():
    assert list(shear_candidates(5)) == [0, 1, -1, 2, -2]
    assert find_shear([x * y]) == 1
    assert find_shear([poly("x^2 + y^2"), BiPoly()]) == 0
    # младшая форма x*y*(x + y): нужен c, при котором c*(c + 1) != 0
    assert find_shear([poly("x^2*y + x*y^2")]) == 1
    with pytest.raises(ShearSearchError):
        find_shear([x], limit=1)


def test_shear_object():
    shear = Shear("x", Fraction(2))
    assert shear.apply(x) == x + y.scale(2)
    assert not shear.is_identity
    assert Shear().is_identity
    assert shear.as_dict() == {"c": "2", "kind": "x"}
    assert Shear("y", Fraction(1)).apply(y) == x + y


def test_squarefree_regularize():
    f = poly("y^2 - x^3")
    regular = squarefree_regularize(f, 2, 1)
    assert regular == f + poly("x^4 + y^4")
    with pytest.raises(PreconditionError):
        squarefree_regularize(f, 1, 1)
    with pytest.raises(PreconditionError):
        squarefree_regularize(f, 2, 0)
    with pytest.raises(NotYRegularError):
        squarefree_regularize(poly("x*y"), 3, 1)
    with pytest.raises(PreconditionError):
        squarefree_regularize(BiPoly.constant(1) + y, 2, 1)
