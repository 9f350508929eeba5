from .bipoly import INFINITY, BiPoly, X, Y
from .constructions import (
    Shear,
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

__all__ = [
    "INFINITY",
    "BiPoly",
    "Shear",
    "X",
    "Y",
    "coprime_part",
    "exact_quotient",
    "find_shear",
    "gcd2",
    "jacobian_det",
    "normalize",
    "shear_candidates",
    "sound_level",
    "squarefree",
    "squarefree_regularize",
    "tangency_poly",
    "truncation_bound",
]
