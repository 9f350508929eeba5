from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from arith import (
    T,
    IntervalQ,
    RationalLike,
    as_rational,
    chain_for,
    coefficients,
    format_rational,
    squarefree_part,
    to_sympy,
    upoly,
    upoly_from_expr,
)
from config import SIGN_REFINEMENT_LIMIT
from errors import DivisionByZeroError, PreconditionError
from logger import logger

from .real_algebraic import RealAlgebraic

# Переменная, исключаемая результантами при поиске минимального многочлена
_Z = sympy.Symbol("z")

# Сколько дешёвых интервальных проверок делать перед символьной
_QUICK_REFINEMENTS = 8

Value = Union[Fraction, sympy.Poly]


@lru_cache(maxsize=1024)
def _minpoly_expr(gen: RealAlgebraic) -> sympy.Expr:
    return gen.minpoly.as_expr(gen.symbol)


@lru_cache(maxsize=1024)
def _modulus(gen: RealAlgebraic, others: Tuple[sympy.Symbol, ...]) -> sympy.Poly:
    return sympy.Poly(_minpoly_expr(gen), gen.symbol, *others, domain=sympy.QQ)


def _reduce(poly: sympy.Poly, gens: Sequence[RealAlgebraic]) -> sympy.Poly:
    """Приводит многочлен от образующих по модулю их минимальных многочленов."""
    symbols = [g.symbol for g in gens]
    for gen in gens:
        if poly.degree(gen.symbol) < gen.degree:
            continue
        others = tuple(s for s in symbols if s != gen.symbol)
        moved = poly.reorder(gen.symbol, *others)
        poly = moved.rem(_modulus(gen, others)).reorder(*symbols)
    return poly


class TowerElem:
    """
    Элемент башни вещественных алгебраических расширений QQ.

    Значение хранится как многочлен с рациональными коэффициентами от
    образующих; каждая образующая есть RealAlgebraic со своим минимальным
    многочленом над QQ. Рациональные значения хранятся как Fraction
    без образующих.
    """

    def __init__(self, gens: Tuple[RealAlgebraic, ...], value: Value):
        self.gens = gens
        self.value = value

    # ------------------------------------------------------------------
    # Конструкторы
    # ------------------------------------------------------------------

    @classmethod
    def rational(cls, value: RationalLike) -> "TowerElem":
        return cls((), as_rational(value))

    @classmethod
    def of(cls, alpha: RealAlgebraic) -> "TowerElem":
        if alpha.is_rational:
            return cls.rational(alpha.rational)
        poly = sympy.Poly(alpha.symbol, alpha.symbol, domain=sympy.QQ)
        return cls((alpha,), poly)

    @classmethod
    def _normalized(
        cls, gens: Tuple[RealAlgebraic, ...], poly: sympy.Poly
    ) -> "TowerElem":
        poly = _reduce(poly, gens)
        used = tuple(g for g in gens if poly.degree(g.symbol) > 0)
        if not used:
            return cls.rational(as_rational(poly.as_expr()))
        if len(used) != len(gens):
            poly = sympy.Poly(poly.as_expr(), *[g.symbol for g in used], domain=sympy.QQ)
        return cls(used, poly)

    # ------------------------------------------------------------------
    # Свойства
    # ------------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return not self.gens

    @property
    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise PreconditionError("Элемент башни не является рациональным")
        return self.value

    def _poly_over(self, symbols: Sequence[sympy.Symbol]) -> sympy.Poly:
        if self.is_rational:
            return sympy.Poly(to_sympy(self.value), *symbols, domain=sympy.QQ)
        return sympy.Poly(self.value.as_expr(), *symbols, domain=sympy.QQ)

    def _unify(
        self, other: "TowerElem"
    ) -> Tuple[Tuple[RealAlgebraic, ...], sympy.Poly, sympy.Poly]:
        gens = self.gens + tuple(g for g in other.gens if g not in self.gens)
        symbols = [g.symbol for g in gens]
        return gens, self._poly_over(symbols), other._poly_over(symbols)

    # ------------------------------------------------------------------
    # Арифметика
    # ------------------------------------------------------------------

    def __add__(self, other: "TowerElem") -> "TowerElem":
        other = _lift(other)
        if self.is_rational and other.is_rational:
            return TowerElem.rational(self.value + other.value)
        gens, a, b = self._unify(other)
        return TowerElem._normalized(gens, a + b)

    __radd__ = __add__

    def __neg__(self) -> "TowerElem":
        return TowerElem(self.gens, -self.value)

    def __sub__(self, other: "TowerElem") -> "TowerElem":
        return self + (-_lift(other))

    def __rsub__(self, other: "TowerElem") -> "TowerElem":
        return _lift(other) - self

    def __mul__(self, other: "TowerElem") -> "TowerElem":
        other = _lift(other)
        if self.is_rational and other.is_rational:
            return TowerElem.rational(self.value * other.value)
        if other.is_rational:
            return self.scale(other.value)
        if self.is_rational:
            return other.scale(self.value)
        gens, a, b = self._unify(other)
        return TowerElem._normalized(gens, a * b)

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "TowerElem":
        factor = as_rational(factor)
        if factor == 0:
            return TowerElem.rational(0)
        if self.is_rational:
            return TowerElem.rational(self.value * factor)
        return TowerElem(self.gens, self.value.mul_ground(to_sympy(factor)))

    def __pow__(self, exponent: int) -> "TowerElem":
        if exponent < 0:
            return TowerElem.rational(1) / (self**-exponent)
        result = TowerElem.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "TowerElem":
        """
        Обратный элемент.

        С одной образующей работает расширенный алгоритм Евклида в QQ(θ).
        С несколькими значение раскладывается по последней образующей θ
        над полем остальных, и Евклид идёт по модулю той части
        минимального многочлена θ, что взаимно проста со значением.

        Raises:
            DivisionByZeroError: если элемент равен нулю
        """
        if self.is_rational:
            if self.value == 0:
                raise DivisionByZeroError("Деление на ноль")
            return TowerElem.rational(1 / self.value)
        if alg_is_zero(self):
            raise DivisionByZeroError("Деление на алгебраический ноль")
        if len(self.gens) == 1:
            gen = self.gens[0]
            inverse = sympy.invert(
                self.value.as_expr(), _minpoly_expr(gen), gen.symbol
            )
            poly = sympy.Poly(inverse, gen.symbol, domain=sympy.QQ)
            return TowerElem._normalized(self.gens, poly)
        theta = self.gens[-1]
        value = _in_last_generator(self)
        modulus = _minpoly_over_tower(theta)
        common = _tower_gcd(value, modulus)
        if len(common) > 1:
            # θ не корень общего множителя, значит корень частного
            modulus, _ = _tower_divmod(modulus, common)
        _, value = _tower_divmod(value, modulus)
        constant, cofactor = _tower_xgcd(value, modulus)
        return evaluate_tower_poly(cofactor, TowerElem.of(theta)) * constant[0].inverse()

    def __truediv__(self, other: "TowerElem") -> "TowerElem":
        other = _lift(other)
        if other.is_rational:
            if other.value == 0:
                raise DivisionByZeroError("Деление на ноль")
            return self.scale(1 / other.value)
        return self * other.inverse()

    def __rtruediv__(self, other: "TowerElem") -> "TowerElem":
        return _lift(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = TowerElem.rational(other)
        if not isinstance(other, TowerElem):
            return NotImplemented
        return alg_is_zero(self - other)

    __hash__ = None

    # ------------------------------------------------------------------
    # Интервальные оценки
    # ------------------------------------------------------------------

    def enclosure(self, gens: Sequence[RealAlgebraic] = ()) -> IntervalQ:
        """Интервал, гарантированно содержащий значение."""
        if self.is_rational:
            return IntervalQ.point(self.value)
        gens = gens or self.gens
        total = IntervalQ.point(Fraction(0))
        for monom, coeff in self.value.terms():
            term = IntervalQ.point(as_rational(coeff))
            for gen, power in zip(gens, monom):
                if power:
                    term = term * (gen.interval**power)
            total = total + term
        return total

    def approximate(self, width: Fraction = Fraction(1, 2**20)) -> Fraction:
        """Рациональное приближение с погрешностью не больше width."""
        if self.is_rational:
            return self.value
        gens = list(self.gens)
        enclosure = self.enclosure(gens)
        while enclosure.width > width:
            gens = [g.bisected() for g in gens]
            enclosure = self.enclosure(gens)
        return enclosure.midpoint

    # ------------------------------------------------------------------
    # Сжатие башни в одно алгебраическое число
    # ------------------------------------------------------------------

    def annihilator(self) -> sympy.Poly:
        """Ненулевой многочлен над QQ, зануляющий значение (итерированные результанты)."""
        return _eliminate(_Z - self.value.as_expr(), self.gens, _Z)

    def collapse(self) -> RealAlgebraic:
        """Значение элемента как одно число со своим минимальным многочленом."""
        if self.is_rational:
            return RealAlgebraic.from_rational(self.value)
        return _collapse(self.gens, self.value)

    def __str__(self) -> str:
        if self.is_rational:
            return format_rational(self.value)
        return str(self.collapse())

    def __repr__(self) -> str:
        return f"TowerElem({self})"


def _lift(value) -> TowerElem:
    if isinstance(value, TowerElem):
        return value
    if isinstance(value, RealAlgebraic):
        return TowerElem.of(value)
    return TowerElem.rational(value)


def _eliminate(expr, gens: Sequence[RealAlgebraic], variable: sympy.Symbol) -> sympy.Poly:
    """Результант expr по всем образующим; остаётся многочлен от variable."""
    current = sympy.Poly(expr, *[g.symbol for g in gens], variable, domain=sympy.QQ)
    for gen in gens:
        modulus = sympy.Poly(_minpoly_expr(gen), *current.gens, domain=sympy.QQ)
        current = current.resultant(modulus)
    return upoly_from_expr(current.as_expr().subs(variable, T))


@lru_cache(maxsize=4096)
def _collapse(gens: Tuple[RealAlgebraic, ...], value: sympy.Poly) -> RealAlgebraic:
    if len(gens) == 1 and value == sympy.Poly(gens[0].symbol, gens[0].symbol, domain=sympy.QQ):
        return gens[0]
    elem = TowerElem(gens, value)
    reduced = squarefree_part(elem.annihilator())
    chain = chain_for(reduced)
    current = list(gens)
    while True:
        enclosure = elem.enclosure(current)
        if chain.count_closed(enclosure.lo, enclosure.hi) == 1:
            return RealAlgebraic.from_root(reduced, enclosure)
        current = [g.bisected() for g in current]


# ----------------------------------------------------------------------
# Многочлены над башней: списки TowerElem по возрастанию степени
# ----------------------------------------------------------------------

TowerPoly = List[TowerElem]


def _trim(p: Sequence[TowerElem]) -> TowerPoly:
    p = list(p)
    while p and alg_is_zero(p[-1]):
        p.pop()
    return p


def _poly_sub(a: Sequence[TowerElem], b: Sequence[TowerElem]) -> TowerPoly:
    zero = TowerElem.rational(0)
    size = max(len(a), len(b))
    return [
        (a[k] if k < len(a) else zero) - (b[k] if k < len(b) else zero)
        for k in range(size)
    ]


def _poly_mul(a: Sequence[TowerElem], b: Sequence[TowerElem]) -> TowerPoly:
    if not a or not b:
        return []
    result = [TowerElem.rational(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            result[i + j] = result[i + j] + x * y
    return result


def _tower_divmod(a: Sequence[TowerElem], b: Sequence[TowerElem]) -> Tuple[TowerPoly, TowerPoly]:
    """Деление с остатком; старший коэффициент b ненулевой."""
    remainder = _trim(a)
    if len(remainder) < len(b):
        return [], remainder
    quotient = [TowerElem.rational(0)] * (len(remainder) - len(b) + 1)
    lead_inverse = b[-1].inverse()
    while len(remainder) >= len(b):
        shift = len(remainder) - len(b)
        factor = remainder[-1] * lead_inverse
        quotient[shift] = factor
        for k, c in enumerate(b[:-1]):
            remainder[shift + k] = remainder[shift + k] - factor * c
        # старший член сокращается точно
        remainder = _trim(remainder[:-1])
    return quotient, remainder


def _tower_gcd(a: Sequence[TowerElem], b: Sequence[TowerElem]) -> TowerPoly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _tower_divmod(a, b)[1]
    return a


def _tower_xgcd(a: Sequence[TowerElem], b: Sequence[TowerElem]) -> Tuple[TowerPoly, TowerPoly]:
    """(g, s), где g = gcd(a, b) и s*a = g по модулю b."""
    r0, r1 = _trim(a), _trim(b)
    s0: TowerPoly = [TowerElem.rational(1)]
    s1: TowerPoly = []
    while r1:
        quotient, remainder = _tower_divmod(r0, r1)
        r0, r1 = r1, remainder
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quotient, s1))
    return r0, s0


def _in_last_generator(a: TowerElem) -> TowerPoly:
    """Значение как многочлен от последней образующей над полем остальных."""
    theta = a.gens[-1]
    rest = a.gens[:-1]
    symbols = [g.symbol for g in rest]
    by_theta = sympy.Poly(a.value.as_expr(), theta.symbol)
    return [
        TowerElem._normalized(rest, sympy.Poly(c, *symbols, domain=sympy.QQ))
        for c in reversed(by_theta.all_coeffs())
    ]


def _minpoly_over_tower(gen: RealAlgebraic) -> TowerPoly:
    return [TowerElem.rational(c) for c in coefficients(gen.minpoly)]


def _vanishes_by_last_generator(a: TowerElem) -> bool:
    """
    Точная проверка на ноль без результантов.

    Значение есть Q(θ) для последней образующей θ. Корни G = gcd(Q, m_θ)
    суть сопряжённые θ, все иррациональны, а на изолирующем отрезке θ
    лежит только сама θ. Поэтому Q(θ) = 0 ровно тогда, когда G меняет
    знак на концах этого отрезка.
    """
    theta = a.gens[-1]
    value = _trim(_in_last_generator(a))
    if not value:
        return True
    common = _tower_gcd(value, _minpoly_over_tower(theta))
    if len(common) == 1:
        return False
    at_lo = evaluate_tower_poly(common, TowerElem.rational(theta.interval.lo))
    at_hi = evaluate_tower_poly(common, TowerElem.rational(theta.interval.hi))
    return alg_sign(at_lo) * alg_sign(at_hi) < 0


def alg_is_zero(a: TowerElem) -> bool:
    """
    Точная проверка на ноль.

    С одной образующей приведённая форма канонична. С несколькими
    сначала пробуем отделить значение от нуля интервалами, затем
    раскладываем по последней образующей.
    """
    if a.is_rational:
        return a.value == 0
    if len(a.gens) == 1:
        return False
    return _is_zero(a.gens, a.value)


@lru_cache(maxsize=8192)
def _is_zero(gens: Tuple[RealAlgebraic, ...], value: sympy.Poly) -> bool:
    a = TowerElem(gens, value)
    current = list(gens)
    for _ in range(_QUICK_REFINEMENTS):
        if a.enclosure(current).excludes_zero():
            return False
        current = [g.bisected() for g in current]
    return _vanishes_by_last_generator(a)


def alg_sign(a: TowerElem) -> int:
    """Точный знак: -1, 0 или +1."""
    if a.is_rational:
        return (a.value > 0) - (a.value < 0)
    gens = list(a.gens)
    for _ in range(SIGN_REFINEMENT_LIMIT):
        enclosure = a.enclosure(gens)
        if enclosure.excludes_zero():
            return enclosure.sign()
        gens = [g.bisected() for g in gens]
    logger.warning(
        f"Знак не отделён за {SIGN_REFINEMENT_LIMIT} уточнений, "
        f"переходим к точной проверке на ноль"
    )
    if alg_is_zero(a):
        return 0
    # ненулевое значение рано или поздно отделится от нуля
    while True:
        gens = [g.bisected() for g in gens]
        enclosure = a.enclosure(gens)
        if enclosure.excludes_zero():
            return enclosure.sign()


def alg_compare(a: TowerElem, b: TowerElem) -> int:
    return alg_sign(_lift(a) - _lift(b))


def alg_arith(a: TowerElem, b: TowerElem, op: str) -> TowerElem:
    """
    Арифметическая операция над элементами башни.

    Args:
        a: Левый операнд
        b: Правый операнд
        op: Один из "+", "-", "*", "/"
    """
    a, b = _lift(a), _lift(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise PreconditionError(f"Неизвестная операция: {op!r}")


def to_decimal(a: TowerElem, digits: int) -> str:
    a = _lift(a)
    return a.collapse().to_decimal(digits)


def evaluate_tower_poly(coeffs: Sequence[TowerElem], point: TowerElem) -> TowerElem:
    """Значение многочлена с коэффициентами по возрастанию степени."""
    result = TowerElem.rational(0)
    for c in reversed(list(coeffs)):
        result = result * point + c
    return result


def real_roots_of_tower_poly(coeffs: Sequence[TowerElem]) -> List[RealAlgebraic]:
    """
    Различные вещественные корни многочлена с коэффициентами из башни.

    Args:
        coeffs: Коэффициенты по возрастанию степени, старший ненулевой

    Returns:
        Корни по возрастанию
    """
    coeffs = [_lift(c) for c in coeffs]
    if all(c.is_rational for c in coeffs):
        return RealAlgebraic.roots_of(upoly([c.value for c in coeffs]))
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    if all(c.is_rational for c in monic):
        return RealAlgebraic.roots_of(upoly([c.value for c in monic]))
    return list(_roots_over_tower(tuple((c.gens, c.value) for c in monic)))


@lru_cache(maxsize=1024)
def _roots_over_tower(key: Tuple[Tuple[Tuple[RealAlgebraic, ...], Value], ...]) -> Tuple[RealAlgebraic, ...]:
    monic = [TowerElem(gens, value) for gens, value in key]
    gens = _merge_gens(c.gens for c in monic)
    symbols = [g.symbol for g in gens]
    expr = sum(
        (c._poly_over(symbols).as_expr() * T**k for k, c in enumerate(monic)),
        sympy.Integer(0),
    )
    # норма многочлена: произведение по всем сопряжённым образующим
    norm = _eliminate(expr, gens, T)
    candidates = RealAlgebraic.roots_of(norm)
    logger.debug(
        f"Норма характеристического многочлена степени {norm.degree()}, "
        f"кандидатов в корни: {len(candidates)}"
    )
    return tuple(
        beta
        for beta in candidates
        if alg_is_zero(evaluate_tower_poly(monic, TowerElem.of(beta)))
    )


def tower_roots(coeffs: Sequence[TowerElem]) -> List[TowerElem]:
    """
    Различные вещественные корни многочлена над башней как элементы башни.

    Если бесквадратная часть многочлена линейна, корень выражается через
    уже имеющиеся образующие. Новая образующая появляется только для
    корней степени больше одной над полем коэффициентов.

    Args:
        coeffs: Коэффициенты по возрастанию степени, старший ненулевой

    Returns:
        Корни по возрастанию
    """
    coeffs = _trim([_lift(c) for c in coeffs])
    if len(coeffs) < 2:
        return []
    if all(c.is_rational for c in coeffs):
        return [TowerElem.of(beta) for beta in real_roots_of_tower_poly(coeffs)]
    core = coeffs
    if len(coeffs) > 2:
        derivative = [c.scale(k) for k, c in enumerate(coeffs)][1:]
        common = _tower_gcd(coeffs, derivative)
        if len(common) > 1:
            core, _ = _tower_divmod(coeffs, common)
    if len(core) == 2:
        return [-(core[0] / core[1])]
    return [TowerElem.of(beta) for beta in real_roots_of_tower_poly(core)]


def _merge_gens(groups: Iterable[Tuple[RealAlgebraic, ...]]) -> Tuple[RealAlgebraic, ...]:
    merged: List[RealAlgebraic] = []
    for group in groups:
        for gen in group:
            if gen not in merged:
                merged.append(gen)
    return tuple(merged)
