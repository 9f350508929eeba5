from typing import Any, Dict, Optional, Union

from algebraic import RealAlgebraic
from arith import format_rational
from config import DECIMAL_DIGITS
from limits import ExtReal, LimitOutcome


def value_json(value: RealAlgebraic, digits: int = DECIMAL_DIGITS) -> Dict[str, Any]:
    """
    Конечное алгебраическое значение в виде JSON-объекта.

    Для рациональных чисел добавляется поле `exact` со строкой `p/q`.
    """
    lo, hi = value.interval_text()
    payload: Dict[str, Any] = {
        "minpoly": value.defining_text,
        "interval": [lo, hi],
        "approx": value.to_decimal(digits),
    }
    if value.is_rational:
        payload["exact"] = format_rational(value.rational)
    return payload


def ext_json(value: ExtReal, digits: int = DECIMAL_DIGITS) -> Union[str, Dict[str, Any]]:
    if value.is_finite:
        return value_json(value.value, digits)
    return str(value)


def outcome_json(
    outcome: LimitOutcome, time_ms: float, digits: int = DECIMAL_DIGITS
) -> Dict[str, Any]:
    """Отчёт о пределе по стабильной JSON-схеме."""
    diagnostics = outcome.diagnostics
    limit: Optional[Dict[str, Any]] = None
    if outcome.value is not None:
        limit = value_json(outcome.value, digits)
    range_payload = None
    if outcome.range is not None:
        range_payload = {
            "min": ext_json(outcome.range.min, digits),
            "max": ext_json(outcome.range.max, digits),
        }
    shear = diagnostics.shear
    return {
        "exists": outcome.exists,
        "limit": limit,
        "range": range_payload,
        "isolated_zero": diagnostics.isolated_zero,
        "shear": shear.as_dict() if shear is not None and not shear.is_identity else None,
        "truncation": {
            "M": diagnostics.separation_level,
            "N": diagnostics.truncation_level,
        },
        "time_ms": round(time_ms, 3),
    }
