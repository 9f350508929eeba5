from .interval import IntervalQ
from .rational import (
    Rational,
    RationalLike,
    as_rational,
    format_rational,
    parse_rational,
    sign,
    to_sympy,
)
from .sturm import SturmChain, horner, one_sided_sign, scaled_value, sturm_chain
from .unipoly import (
    T,
    UniPoly,
    bisect_root,
    cauchy_bound,
    chain_for,
    coefficients,
    count_real_roots,
    evaluate,
    integer_coefficients,
    irreducible_factors,
    isolate_real_roots,
    refine_root,
    resultant,
    squarefree_part,
    upoly,
    upoly_from_expr,
    upoly_gcd,
)

__all__ = [
    "IntervalQ",
    "Rational",
    "RationalLike",
    "SturmChain",
    "T",
    "UniPoly",
    "as_rational",
    "bisect_root",
    "cauchy_bound",
    "chain_for",
    "coefficients",
    "count_real_roots",
    "evaluate",
    "format_rational",
    "horner",
    "integer_coefficients",
    "irreducible_factors",
    "isolate_real_roots",
    "one_sided_sign",
    "parse_rational",
    "refine_root",
    "resultant",
    "scaled_value",
    "sign",
    "squarefree_part",
    "sturm_chain",
    "to_sympy",
    "upoly",
    "upoly_from_expr",
    "upoly_gcd",
]
