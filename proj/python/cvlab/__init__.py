"""Exact subset-sum moments, identity checkers, and Wolstenholme scans.

Thin re-export of the compiled extension. Exact values cross the boundary
as decimal strings ("4+2i", "50/3") or Python ints; structured results are
plain dicts matching the CLI's JSON output.
"""

from ._core import (
    DEFAULT_BUDGET,
    SCHEMA,
    BudgetExceeded,
    NotWolstenholme,
    binom_mod_pk,
    binomial,
    bounded_compositions,
    check_congruence18,
    check_congruence20,
    check_glaisher,
    check_identity,
    composition_weight,
    count_compositions,
    is_prime,
    known_ids,
    moment,
    pmf,
    sample_moments,
    wolstenholme_scan,
)

__all__ = [
    "DEFAULT_BUDGET",
    "SCHEMA",
    "BudgetExceeded",
    "NotWolstenholme",
    "binom_mod_pk",
    "binomial",
    "bounded_compositions",
    "check_congruence18",
    "check_congruence20",
    "check_glaisher",
    "check_identity",
    "composition_weight",
    "count_compositions",
    "is_prime",
    "known_ids",
    "moment",
    "pmf",
    "sample_moments",
    "wolstenholme_scan",
]

__version__ = "1.0.0"
