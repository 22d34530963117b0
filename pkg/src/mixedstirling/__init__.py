"""Exact counting of coloured permutation cycle structures.

Core families: counts of permutations with coloured cycles where t cycles
share one special colour and k-1 cycles carry distinct colours, together
with cycle-length-restricted, r-pinned and Bell-polynomial variants. Every
family is computable through several independent routes, all cross-checked
against brute-force enumeration.
"""

from .exactmath import (
    Triangle,
    binomial,
    factorial,
    falling,
    lah,
    multinomial,
    rising,
    stirling1,
    stirling2,
)
from .colourperm import (
    coloured_atmost,
    coloured_count,
    coloured_count_rec,
    coloured_from_atmost,
    distinct_coloured,
    distinct_coloured_rec,
)
from .mixedcore import (
    mixed_closed,
    mixed_conv,
    mixed_leader_sum_k,
    mixed_leader_sum_t,
    mixed_rec_cyclesize,
    mixed_rec_insert,
    mixed_rec_marknonspecial,
    mixed_rec_markspecial,
    mixed_table,
)
from .egfseries import (
    TruncatedSeries,
    cyc_restricted,
    egf_bellstar,
    egf_extract,
    egf_mixed,
    egf_mixed_S,
    log_one_over_one_minus_x,
    seq_of_cycles,
    weight_egf,
)
from .restricted import (
    SizeSet,
    extract_fixed_points,
    extract_u_cycles,
    mixed_S,
    mixed_S_conv,
    mixed_S_cyclesize,
    mixed_S_marknonspecial,
    mixed_S_markspecial,
    mixed_derangement,
    parse_size_set,
    stirling1_S,
)
from .rstirling import (
    mixed_r_closed,
    mixed_r_doublesum,
    stirling1_r,
    stirling1_r_conv_back,
    stirling1_r_conv_front,
)
from .bellpoly import (
    WeightSequence,
    bell_partial,
    bell_r_partial,
    bellstar,
    bellstar_composition,
    parse_weights,
)

__version__ = "0.1.0"
