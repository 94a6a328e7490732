"""Exact arithmetic for degenerate and central Bell polynomials.

Everything computes over arbitrary-precision rationals; quantities that
depend on the deformation parameter come back as dense ``LambdaPoly``
values.  Every number family and polynomial family has at least two
independent computation routes, and ``run_suite`` verifies the published
identities between them mechanically.
"""

from .bell import (
    all_ones,
    central_complete,
    central_complete_partition,
    central_complete_sum,
    central_incomplete,
    central_incomplete_partition,
    complete_bell_degenerate,
    complete_bell_degenerate_sum,
    degenerate_bell_poly,
    degenerate_bell_poly_gf,
    degenerate_central_bell,
    degenerate_central_bell_gf,
    incomplete_bell_classical,
    incomplete_bell_classical_poly,
    incomplete_bell_degenerate,
    incomplete_bell_degenerate_partition,
    partition_profiles,
)
from .caching import clear_caches
from .identities import (
    CHECKS,
    Counterexample,
    IdentityReport,
    SuiteConfig,
    reports_to_json,
    run_suite,
)
from .numbers import (
    binomial,
    central_coeff,
    central_factorial2,
    central_factorial2_from_stirling1,
    degen_exp_series,
    degen_falling,
    degen_rising,
    degen_stirling2,
    stirling1,
    stirling1_recurrence,
    stirling2_classical,
)
from .ring import (
    LambdaPoly,
    Rational,
    format_rational,
    parse_rational,
    poly_to_coeff_strings,
    poly_to_plain,
)
from .series import Series, default_order

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "Counterexample",
    "IdentityReport",
    "LambdaPoly",
    "Rational",
    "Series",
    "SuiteConfig",
    "all_ones",
    "binomial",
    "central_coeff",
    "central_complete",
    "central_complete_partition",
    "central_complete_sum",
    "central_factorial2",
    "central_factorial2_from_stirling1",
    "central_incomplete",
    "central_incomplete_partition",
    "clear_caches",
    "complete_bell_degenerate",
    "complete_bell_degenerate_sum",
    "degen_exp_series",
    "degen_falling",
    "degen_rising",
    "degen_stirling2",
    "degenerate_bell_poly",
    "degenerate_bell_poly_gf",
    "degenerate_central_bell",
    "degenerate_central_bell_gf",
    "default_order",
    "format_rational",
    "incomplete_bell_classical",
    "incomplete_bell_classical_poly",
    "incomplete_bell_degenerate",
    "incomplete_bell_degenerate_partition",
    "parse_rational",
    "partition_profiles",
    "poly_to_coeff_strings",
    "poly_to_plain",
    "reports_to_json",
    "run_suite",
    "stirling1",
    "stirling1_recurrence",
    "stirling2_classical",
    "__version__",
]
