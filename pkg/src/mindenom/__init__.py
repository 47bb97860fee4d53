"""Minimal denominators of rational intervals and their exact sum identities.

The package answers three kinds of question:

* farey / minden: what is the least denominator of a fraction inside a given
  interval, and how do the answers tile ]0, 1] when the interval is a window
  of a uniform grid?
* sums: exact rational identities for S(n), the sum of the n grid window
  denominators, its integral smoothing, and the sawtooth decomposition of
  their difference.
* expsums: the mod-q Fourier toolbox (DFT, Kloosterman and Ramanujan sums,
  sawtooth transform) with the analytic bounds that control the remainder.

The command line entry point is ``mindenom`` (see mindenom.cli).
"""

from .expsums import (
    ArithmeticTables,
    PeriodicFunction,
    b1,
    b1_hat_closed,
    beta,
    dft,
    divisor_count,
    geometric_sum_bound_check,
    idft,
    kloosterman,
    kloosterman_table,
    ramanujan,
    tau_beta_summatory,
    twisted_b1_bound,
    twisted_b1_sum,
    weighted_b1_bound,
    weighted_b1_sum,
    weil_bound,
)
from .farey import (
    AdjacentPair,
    adjacent_pairs,
    ceil_count,
    farey_sequence,
    inv_mod,
    next_denominator,
    totient_summatory,
)
from .minden import (
    Interval,
    min_denominator,
    min_denominator_grid,
    min_denominator_window,
    min_fraction,
)
from .sums import (
    RemainderParts,
    SumReport,
    count_above,
    denominator_sum,
    denominator_sum_via_counts,
    frac_jump_sum,
    measure_above,
    remainder,
    remainder_parts,
    sawtooth_gap_sum,
    sum_report,
    variant_gap,
    window_integral,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacentPair",
    "ArithmeticTables",
    "Interval",
    "PeriodicFunction",
    "RemainderParts",
    "SumReport",
    "adjacent_pairs",
    "b1",
    "b1_hat_closed",
    "beta",
    "ceil_count",
    "count_above",
    "denominator_sum",
    "denominator_sum_via_counts",
    "dft",
    "divisor_count",
    "farey_sequence",
    "frac_jump_sum",
    "geometric_sum_bound_check",
    "idft",
    "inv_mod",
    "kloosterman",
    "kloosterman_table",
    "measure_above",
    "min_denominator",
    "min_denominator_grid",
    "min_denominator_window",
    "min_fraction",
    "next_denominator",
    "ramanujan",
    "remainder",
    "remainder_parts",
    "sawtooth_gap_sum",
    "sum_report",
    "tau_beta_summatory",
    "totient_summatory",
    "twisted_b1_bound",
    "twisted_b1_sum",
    "variant_gap",
    "weighted_b1_bound",
    "weighted_b1_sum",
    "weil_bound",
    "window_integral",
]
