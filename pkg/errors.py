class BiLimitError(ValueError):
    """Базовая ошибка вычислительного ядра."""


class ZeroDenominatorError(BiLimitError):
    """Знаменатель тождественно равен нулю."""


class NotYRegularError(BiLimitError):
    """Многочлен не является y-регулярным."""


class PreconditionError(BiLimitError):
    """Нарушено предусловие операции."""


class DivisionByZeroError(BiLimitError, ZeroDivisionError):
    """Точное деление на алгебраический ноль."""


class ShearSearchError(BiLimitError):
    """Не удалось подобрать константу сдвига."""


class PolynomialSyntaxError(BiLimitError):
    """Синтаксическая ошибка в записи многочлена."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (строка {line}, столбец {column})")
        self.message = message
        self.line = line
        self.column = column
