from .criteria import (
    CertifiedLimits,
    branch_limit,
    certified_limits,
    exists_zero_general,
    general_coordinates,
    has_real_branches,
    isolated_zero_test,
    limit_F_degenerate,
    limit_zero_isolated,
    local_sign,
    range_isolated,
    range_with_details,
)
from .engine import bilimit, candidate_limit
from .outcome import (
    BranchLimit,
    Diagnostics,
    ExtReal,
    ExtTag,
    LimitOutcome,
    OutcomeKind,
    RangeInterval,
)

__all__ = [
    "BranchLimit",
    "CertifiedLimits",
    "Diagnostics",
    "ExtReal",
    "ExtTag",
    "LimitOutcome",
    "OutcomeKind",
    "RangeInterval",
    "bilimit",
    "branch_limit",
    "candidate_limit",
    "certified_limits",
    "exists_zero_general",
    "general_coordinates",
    "has_real_branches",
    "isolated_zero_test",
    "limit_F_degenerate",
    "limit_zero_isolated",
    "local_sign",
    "range_isolated",
    "range_with_details",
]
