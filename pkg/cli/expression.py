from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from bipoly import BiPoly
from errors import PolynomialSyntaxError

VARIABLES = ("x", "y")
_OPERATORS = "+-*^/()"


@dataclass(frozen=True)
class Token:
    kind: str  # int | var | op | end
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class Literal:
    value: Fraction

    def lower(self) -> BiPoly:
        return BiPoly.constant(self.value)


@dataclass(frozen=True)
class Variable:
    name: str

    def lower(self) -> BiPoly:
        return BiPoly.x() if self.name == "x" else BiPoly.y()


@dataclass(frozen=True)
class Power:
    base: "ExprAst"
    exponent: int

    def lower(self) -> BiPoly:
        return self.base.lower() ** self.exponent


@dataclass(frozen=True)
class Product:
    factors: Tuple["ExprAst", ...]

    def lower(self) -> BiPoly:
        result = BiPoly.constant(1)
        for factor in self.factors:
            result = result * factor.lower()
        return result


@dataclass(frozen=True)
class Sum:
    """Сумма слагаемых со знаками: (+1 | -1, слагаемое)."""

    terms: Tuple[Tuple[int, "ExprAst"], ...]

    def lower(self) -> BiPoly:
        result = BiPoly()
        for sign, term in self.terms:
            lowered = term.lower()
            result = result + lowered if sign > 0 else result - lowered
        return result


ExprAst = Union[Literal, Variable, Power, Product, Sum]


def tokenize(src: str) -> List[Token]:
    """
    Разбивает запись многочлена на лексемы с номерами строки и столбца.

    Raises:
        PolynomialSyntaxError: на неизвестном символе или переменной
    """
    tokens: List[Token] = []
    line, column, i = 1, 1, 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line, column, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            column, i = column + 1, i + 1
            continue
        if ch.isdigit():
            start = i
            while i < len(src) and src[i].isdigit():
                i += 1
            tokens.append(Token("int", src[start:i], line, column))
            column += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(src) and (src[i].isalnum() or src[i] == "_"):
                i += 1
            word = src[start:i]
            if word in VARIABLES:
                tokens.append(Token("var", word, line, column))
            elif all(c in VARIABLES for c in word):
                raise PolynomialSyntaxError(
                    f"Неявное умножение не поддерживается: '{word}', используйте '*'",
                    line,
                    column,
                )
            else:
                raise PolynomialSyntaxError(
                    f"Неизвестная переменная '{word}', допустимы только x и y",
                    line,
                    column,
                )
            column += i - start
            continue
        if ch in _OPERATORS:
            tokens.append(Token("op", ch, line, column))
            column, i = column + 1, i + 1
            continue
        raise PolynomialSyntaxError(f"Неожиданный символ '{ch}'", line, column)
    tokens.append(Token("end", "", line, column))
    return tokens


class _Parser:
    """Рекурсивный спуск по грамматике expr / term / factor / atom."""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def _accept(self, op: str) -> Optional[Token]:
        if self.current.kind == "op" and self.current.text == op:
            return self._advance()
        return None

    def _fail(self, message: str, token: Optional[Token] = None):
        token = token or self.current
        raise PolynomialSyntaxError(message, token.line, token.column)

    def parse(self) -> ExprAst:
        node = self.expr()
        if self.current.kind != "end":
            if self.current.kind in ("int", "var") or self.current.text == "(":
                self._fail("Неявное умножение не поддерживается, используйте '*'")
            self._fail(f"Неожиданная лексема '{self.current.text}'")
        return node

    def expr(self) -> ExprAst:
        terms = [(1, self.term())]
        while self.current.kind == "op" and self.current.text in "+-":
            sign = 1 if self._advance().text == "+" else -1
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> ExprAst:
        factors = [self.factor()]
        while self._accept("*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> ExprAst:
        negative = self._accept("-") is not None
        node = self.atom()
        caret = self._accept("^")
        if caret is not None:
            node = Power(node, self._exponent())
        if negative:
            return Product((Literal(Fraction(-1)), node))
        return node

    def _exponent(self) -> int:
        token = self.current
        if token.kind == "op" and token.text == "-":
            self._fail("Показатель степени не может быть отрицательным")
        if token.kind != "int":
            self._fail("Показатель степени должен быть целым неотрицательным числом")
        self._advance()
        if self.current.kind == "op" and self.current.text == "/":
            self._fail("Показатель степени должен быть целым неотрицательным числом")
        return int(token.text)

    def atom(self) -> ExprAst:
        token = self.current
        if token.kind == "var":
            self._advance()
            return Variable(token.text)
        if token.kind == "int":
            self._advance()
            value = Fraction(int(token.text))
            if self._accept("/"):
                denominator = self.current
                if denominator.kind != "int":
                    self._fail("После '/' ожидается натуральный знаменатель")
                self._advance()
                if int(denominator.text) == 0:
                    self._fail("Знаменатель дроби равен нулю", denominator)
                value /= int(denominator.text)
            return Literal(value)
        if self._accept("("):
            node = self.expr()
            if not self._accept(")"):
                self._fail("Ожидалась ')'")
            return node
        if token.kind == "end":
            self._fail("Неожиданный конец выражения")
        self._fail(f"Неожиданная лексема '{token.text}'")


def parse_expr(src: str) -> ExprAst:
    """
    Разбирает запись многочлена от x и y.

    Raises:
        PolynomialSyntaxError: с номером строки и столбца ошибки
    """
    return _Parser(tokenize(src)).parse()


def parse_poly(src: str) -> BiPoly:
    """Разбирает запись и приводит её к каноническому BiPoly."""
    return parse_expr(src).lower()
