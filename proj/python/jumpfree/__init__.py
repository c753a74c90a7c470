"""Order types, jump-free families, regressive regularity and target-zero subset sum."""

from ._jumpfree import (
    CapacityError,
    apply_gamma,
    build_fh,
    build_universe,
    cubes_in,
    enumerate_order_types,
    field,
    find_witness,
    gen_family,
    is_full_over,
    is_jump_free_family,
    is_reflexive,
    jump_free_violation,
    order_equivalent,
    order_signature,
    predecessor_set,
    regressive_regularity,
    run,
    run_experiment,
    solve_subset_sum,
)

__all__ = [
    "CapacityError",
    "apply_gamma",
    "build_fh",
    "build_universe",
    "cubes_in",
    "enumerate_order_types",
    "field",
    "find_witness",
    "gen_family",
    "is_full_over",
    "is_jump_free_family",
    "is_reflexive",
    "jump_free_violation",
    "order_equivalent",
    "order_signature",
    "predecessor_set",
    "regressive_regularity",
    "run",
    "run_experiment",
    "solve_subset_sum",
]
