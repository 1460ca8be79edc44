"""Zeckendorf numeration, Lucas-form algebra and digit-sum extremal claims.

The package turns a set of exact statements about the Zeckendorf digit sums
of powers into executable checks: greedy encoding with an independent
minimality oracle, closed multiplication on Lucas forms, the extremal
families whose powers have unusually few or many digits, and range scans
that verify every claim with certified comparisons.
"""

from .certified import PrecisionExhausted, certified_ceil, certified_floor, sign
from .constructions import (
    BelowThresholdError,
    FamilyMember,
    bounded_power_witness,
    cube_blocks,
    family_member,
    lower_family,
    lower_power_upper_bound,
    lucas_power_remainder,
    scaled_lower_family,
    scaled_upper_family,
    square_blocks,
    upper_family,
    upper_power_lower_bound,
    witness_threshold,
)
from .claims import ALL_CLAIMS, run_all, run_claim
from .experiments import (
    ClaimReport,
    count_large_ratio,
    count_small_ratio,
    ratio,
    ratio_table,
    reports_to_csv,
    reports_to_json,
    scan_ratio_bounds,
    verify_fibonacci_deficits,
)
from .fib_core import GOLDEN, Constants, digit_index_estimate, fib, lucas
from .lucas_algebra import (
    InterferenceError,
    LucasForm,
    form_digit_sum,
    lucas_power_direct,
    make_form,
    mul,
    multiple_offsets,
    multiple_stabilization_index,
    multiple_to_blocks,
    power,
    render_form,
    value,
)
from .zeckendorf import (
    ORACLE_CAP_DEFAULT,
    FibBlock,
    ZeckRep,
    decode,
    digit_sum,
    encode,
    from_blocks,
    from_digits,
    minimal_count_oracle,
    noninterfering,
    to_digits,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CLAIMS",
    "BelowThresholdError",
    "ClaimReport",
    "Constants",
    "FamilyMember",
    "FibBlock",
    "GOLDEN",
    "InterferenceError",
    "LucasForm",
    "ORACLE_CAP_DEFAULT",
    "PrecisionExhausted",
    "ZeckRep",
    "bounded_power_witness",
    "certified_ceil",
    "certified_floor",
    "count_large_ratio",
    "count_small_ratio",
    "cube_blocks",
    "decode",
    "digit_index_estimate",
    "digit_sum",
    "encode",
    "family_member",
    "fib",
    "form_digit_sum",
    "from_blocks",
    "from_digits",
    "lower_family",
    "lower_power_upper_bound",
    "lucas",
    "lucas_power_direct",
    "lucas_power_remainder",
    "make_form",
    "minimal_count_oracle",
    "mul",
    "multiple_offsets",
    "multiple_stabilization_index",
    "multiple_to_blocks",
    "noninterfering",
    "power",
    "ratio",
    "ratio_table",
    "render_form",
    "reports_to_csv",
    "reports_to_json",
    "run_all",
    "run_claim",
    "scaled_lower_family",
    "scaled_upper_family",
    "scan_ratio_bounds",
    "sign",
    "square_blocks",
    "to_digits",
    "upper_family",
    "upper_power_lower_bound",
    "value",
    "verify_fibonacci_deficits",
    "witness_threshold",
]
