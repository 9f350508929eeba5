import math
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

import sympy

from arith import RationalLike, UniPoly, as_rational, format_rational, to_sympy, upoly
from errors import PreconditionError

X, Y = sympy.symbols("x y")

Monomial = Tuple[int, int]

# Порядок нулевого многочлена
INFINITY = math.inf


def _graded_lex_key(monomial: Monomial) -> Tuple[int, int]:
    i, j = monomial
    return i + j, i


class BiPoly:
    """
    Разреженный многочлен от x, y над QQ.

    Хранит только ненулевые коэффициенты; степень и порядок вычисляются
    по термам при каждом обращении.
    """

    def __init__(self, terms: Optional[Mapping[Monomial, RationalLike]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise PreconditionError(f"Отрицательный показатель в мономе {(i, j)}")
            q = as_rational(c)
            if q != 0:
                cleaned[(int(i), int(j))] = q
        self._terms = cleaned

    # ------------------------------------------------------------------
    # Конструкторы
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, value: RationalLike) -> "BiPoly":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: RationalLike = 1) -> "BiPoly":
        return cls({(i, j): coeff})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BiPoly":
        return cls.monomial(0, 1)

    @classmethod
    def from_sympy(cls, value) -> "BiPoly":
        """Из многочлена или выражения sympy от x, y."""
        poly = sympy.Poly(value, X, Y, domain=sympy.QQ)
        return cls(
            {monom: as_rational(sympy.Rational(c)) for monom, c in poly.as_dict().items()}
        )

    def to_sympy(self) -> sympy.Poly:
        rep = {monom: to_sympy(c) for monom, c in self._terms.items()}
        if not rep:
            return sympy.Poly(0, X, Y, domain=sympy.QQ)
        return sympy.Poly.from_dict(rep, X, Y, domain=sympy.QQ)

    # ------------------------------------------------------------------
    # Доступ к термам
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Термы в порядке убывания graded-lex."""
        return sorted(self._terms.items(), key=lambda kv: _graded_lex_key(kv[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(monom == (0, 0) for monom in self._terms)

    @property
    def degree(self) -> Union[int, float]:
        if self.is_zero:
            return -INFINITY
        return max(i + j for i, j in self._terms)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def leading_coefficient(self) -> Fraction:
        """Коэффициент старшего в graded-lex порядке терма."""
        if self.is_zero:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    # ------------------------------------------------------------------
    # Порядок и однородные компоненты
    # ------------------------------------------------------------------

    def order(self) -> Union[int, float]:
        """Наименьшая полная степень термов; +∞ для нуля."""
        if self.is_zero:
            return INFINITY
        return min(i + j for i, j in self._terms)

    def homog_component(self, k: int) -> "BiPoly":
        return BiPoly({(i, j): c for (i, j), c in self._terms.items() if i + j == k})

    def lowest_form(self) -> "BiPoly":
        if self.is_zero:
            return self
        return self.homog_component(self.order())

    def is_y_regular(self) -> bool:
        """
        Коэффициент при y^m в младшей форме отличен от нуля, m = ord f.

        Raises:
            PreconditionError: для нулевого многочлена
        """
        if self.is_zero:
            raise PreconditionError("y-регулярность нулевого многочлена не определена")
        return (0, self.order()) in self._terms

    def lowest_form_at(self, c: RationalLike) -> Fraction:
        """Значение младшей формы f_m(c, 1)."""
        c = as_rational(c)
        m = self.order()
        return sum(
            (coeff * c**i for (i, j), coeff in self._terms.items() if i + j == m),
            Fraction(0),
        )

    # ------------------------------------------------------------------
    # Арифметика
    # ------------------------------------------------------------------

    def __add__(self, other: Union["BiPoly", RationalLike]) -> "BiPoly":
        other = _lift(other)
        result = dict(self._terms)
        for monom, c in other._terms.items():
            result[monom] = result.get(monom, Fraction(0)) + c
        return BiPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({monom: -c for monom, c in self._terms.items()})

    def __sub__(self, other: Union["BiPoly", RationalLike]) -> "BiPoly":
        return self + (-_lift(other))

    def __rsub__(self, other: RationalLike) -> "BiPoly":
        return _lift(other) - self

    def __mul__(self, other: Union["BiPoly", RationalLike]) -> "BiPoly":
        other = _lift(other)
        result: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        return BiPoly(result)

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "BiPoly":
        factor = as_rational(factor)
        return BiPoly({monom: c * factor for monom, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise PreconditionError("Отрицательная степень многочлена")
        result = BiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ------------------------------------------------------------------
    # Значения и производные
    # ------------------------------------------------------------------

    def evaluate(self, x: RationalLike, y: RationalLike) -> Fraction:
        x, y = as_rational(x), as_rational(y)
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), Fraction(0))

    def diff_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): c * i for (i, j), c in self._terms.items() if i > 0})

    def diff_y(self, times: int = 1) -> "BiPoly":
        result = self
        for _ in range(times):
            result = BiPoly(
                {(i, j - 1): c * j for (i, j), c in result._terms.items() if j > 0}
            )
        return result

    def on_y_axis(self) -> UniPoly:
        """Ограничение f(0, y) как многочлен от t = y."""
        coeffs = [Fraction(0)] * (self.degree_y + 1)
        for (i, j), c in self._terms.items():
            if i == 0:
                coeffs[j] = c
        return upoly(coeffs)

    # ------------------------------------------------------------------
    # Замены координат
    # ------------------------------------------------------------------

    def shear_x(self, c: RationalLike) -> "BiPoly":
        """f(x + c*y, y)."""
        c = as_rational(c)
        if c == 0:
            return self
        result: Dict[Monomial, Fraction] = {}
        for (i, j), coeff in self._terms.items():
            for k in range(i + 1):
                key = (k, j + i - k)
                term = coeff * math.comb(i, k) * c ** (i - k)
                result[key] = result.get(key, Fraction(0)) + term
        return BiPoly(result)

    def shear_y(self) -> "BiPoly":
        """f(x, x + y)."""
        result: Dict[Monomial, Fraction] = {}
        for (i, j), coeff in self._terms.items():
            for k in range(j + 1):
                key = (i + j - k, k)
                result[key] = result.get(key, Fraction(0)) + coeff * math.comb(j, k)
        return BiPoly(result)

    def translate(self, a: RationalLike, b: RationalLike) -> "BiPoly":
        """f(x + a, y + b), сдвиг Тейлора по обеим переменным."""
        a, b = as_rational(a), as_rational(b)
        if a == 0 and b == 0:
            return self
        result: Dict[Monomial, Fraction] = {}
        for (i, j), coeff in self._terms.items():
            for k in range(i + 1):
                cx = coeff * math.comb(i, k) * a ** (i - k)
                if cx == 0:
                    continue
                for l in range(j + 1):
                    key = (k, l)
                    term = cx * math.comb(j, l) * b ** (j - l)
                    result[key] = result.get(key, Fraction(0)) + term
        return BiPoly(result)

    def reflect_x(self) -> "BiPoly":
        """f(-x, y)."""
        return BiPoly(
            {(i, j): (-c if i % 2 else c) for (i, j), c in self._terms.items()}
        )

    # ------------------------------------------------------------------
    # Текстовая форма
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: List[str] = []
        for (i, j), c in self.sorted_terms():
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mono = "*".join(factors)
            magnitude = abs(c)
            if not mono:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{format_rational(magnitude)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self})"


def _lift(value: Union[BiPoly, RationalLike]) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    return BiPoly.constant(value)
