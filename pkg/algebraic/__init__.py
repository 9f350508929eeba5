from .real_algebraic import RealAlgebraic, alg_compare_real, separate
from .tower import (
    TowerElem,
    alg_arith,
    alg_compare,
    alg_is_zero,
    alg_sign,
    evaluate_tower_poly,
    real_roots_of_tower_poly,
    to_decimal,
    tower_roots,
)

__all__ = [
    "RealAlgebraic",
    "TowerElem",
    "alg_arith",
    "alg_compare",
    "alg_compare_real",
    "alg_is_zero",
    "alg_sign",
    "evaluate_tower_poly",
    "real_roots_of_tower_poly",
    "separate",
    "to_decimal",
    "tower_roots",
]
