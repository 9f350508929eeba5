from fractions import Fraction
from typing import Union

import sympy

# Точное рациональное число: всегда несократимо, знаменатель положителен
Rational = Fraction

RationalLike = Union[Fraction, int, sympy.Rational]


def as_rational(value: RationalLike) -> Fraction:
    """
    Приводит целое, Fraction или рациональное число sympy к Fraction.

    Args:
        value: Исходное значение

    Returns:
        Точное рациональное число
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        # элементы домена QQ (gmpy2.mpq, PythonMPQ)
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"Не рациональное значение: {value!r}")


def to_sympy(value: RationalLike) -> sympy.Rational:
    q = as_rational(value)
    return sympy.Rational(q.numerator, q.denominator)


def format_rational(value: RationalLike) -> str:
    """Каноническая запись `p/q` (или `p` для целых)."""
    q = as_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Разбирает запись вида `p`, `-p` или `p/q`.

    Raises:
        ValueError: если запись не является рациональным числом
    """
    text = text.strip()
    if not text:
        raise ValueError("Пустая запись рационального числа")
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            if "." in num or "." in den:
                raise ValueError
            return Fraction(int(num), int(den))
        if "." in text or "e" in text.lower():
            raise ValueError
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Не рациональное число: {text!r}") from None


def sign(value: RationalLike) -> int:
    q = as_rational(value)
    return (q > 0) - (q < 0)
