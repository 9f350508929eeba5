from .branch import BranchSet, PuiseuxBranch, SeriesLeading, Side
from .newton import expand, expand_both, puiseux_roots, separation_level
from .substitution import (
    extend_branch,
    generic_order,
    leading_term,
    member,
    multiplicity,
    multiplicity_by_derivatives,
    substitute_order,
)

__all__ = [
    "BranchSet",
    "PuiseuxBranch",
    "SeriesLeading",
    "Side",
    "expand",
    "expand_both",
    "extend_branch",
    "generic_order",
    "leading_term",
    "member",
    "multiplicity",
    "multiplicity_by_derivatives",
    "puiseux_roots",
    "separation_level",
    "substitute_order",
]
