"""The symmetric-product filtration of Burnside rings."""

from symprod.filtration.ideals import (
    NestedPair,
    augmentation_ideal,
    coset_action_check,
    ideal_lattice,
    nested_pairs,
    rational_step_check,
    sp_invariants,
    stabilization_index,
    stage_thresholds,
    t_class,
    t_n,
)
from symprod.filtration.table import (
    FiltrationRunner,
    FiltrationStage,
    FiltrationTable,
    build_table,
    compute_stage,
)

__all__ = [
    "FiltrationRunner",
    "FiltrationStage",
    "FiltrationTable",
    "NestedPair",
    "augmentation_ideal",
    "build_table",
    "compute_stage",
    "coset_action_check",
    "ideal_lattice",
    "nested_pairs",
    "rational_step_check",
    "sp_invariants",
    "stabilization_index",
    "stage_thresholds",
    "t_class",
    "t_n",
]
