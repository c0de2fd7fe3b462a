"""Arithmetic progressions in S_{a,b} = {a^x + b^y : x, y >= 0}."""

from ._core import (
    BudgetExceeded,
    ContractError,
    __version__,
    bajpai_bennett_5term,
    check_ids,
    contains,
    count_3term,
    deweger_3term,
    enumerate,
    family,
    find_progressions,
    lemma21_solve,
    ord_p,
    power_exponent,
    representations,
    run_check,
    run_cli,
    smooth_enumerate,
    sweep,
    theorem1_match,
)

__all__ = [
    "BudgetExceeded",
    "ContractError",
    "__version__",
    "bajpai_bennett_5term",
    "check_ids",
    "contains",
    "count_3term",
    "deweger_3term",
    "enumerate",
    "family",
    "find_progressions",
    "lemma21_solve",
    "ord_p",
    "power_exponent",
    "representations",
    "run_check",
    "run_cli",
    "smooth_enumerate",
    "sweep",
    "theorem1_match",
]
