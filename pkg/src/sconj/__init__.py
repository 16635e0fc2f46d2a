"""Involutions on integer partitions that exchange r_s (parts divisible by s)
and c_s (leg-zero cells whose arm + 1 is divisible by s), fixing the
sequence of non-zero remainders, plus the matching generating functions."""

from .diagram import (
    GREEN,
    YELLOW,
    ColouredCell,
    RemainderDiagram,
    compatible,
    conjugate_diagram,
    diagram_c,
    diagram_r,
    from_partition,
    reinsert,
    validate,
)
from .involution import (
    ReductionTrace,
    conj_empty,
    involute,
    involute_trace,
    map_strict,
    reduce_yellow,
    unreduce_yellow,
    unreduce_yellow_trace,
)
from .oracle import (
    JointDistribution,
    joint_distribution,
    partitions_of,
    partitions_with_rem,
    verify_gf,
    verify_involution,
)
from .partitions import (
    Cell,
    DomainError,
    InvariantError,
    Partition,
    arm,
    bf_stat,
    blow_up,
    c_stat,
    column_positions,
    conjugate,
    delta,
    hook,
    is_core,
    leg,
    r_stat,
    reduce,
    remainder_sequence,
    row_positions,
    s_cells,
    weak_descents,
    wmaj,
)
from .qseries import (
    MultiPoly,
    bf_product,
    gf_closed,
    gf_empty,
    gf_sum_form,
    gf_symmetric,
    poch_truncated,
    qbinom,
)

__version__ = "0.1.0"
