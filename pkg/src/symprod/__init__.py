"""symprod: exact Burnside rings, the symmetric-product filtration and bisets."""

__version__ = "0.1.0"

from symprod.bisets.morphisms import CatMorphism, compose, evaluate
from symprod.bisets.pairs import PairLA, category_basis
from symprod.burnside.operations import augmentation, marks, multiply, res_tr_formula, restrict, transfer
from symprod.burnside.ring import BurnsideElement, BurnsideRing, burnside_ring
from symprod.core.config import SymprodConfig, load_config
from symprod.filtration.ideals import ideal_lattice, sp_invariants, stabilization_index, t_class
from symprod.filtration.table import build_table
from symprod.groups.lattice import subgroup_classes, subgroup_lattice
from symprod.groups.parser import group_from_spec
from symprod.groups.permgroup import PermGroup, Subgroup
from symprod.lattice.basis import AbelianInvariants, LatticeBasis, hnf_basis

__all__ = [
    "AbelianInvariants",
    "BurnsideElement",
    "BurnsideRing",
    "CatMorphism",
    "LatticeBasis",
    "PairLA",
    "PermGroup",
    "Subgroup",
    "SymprodConfig",
    "augmentation",
    "build_table",
    "burnside_ring",
    "category_basis",
    "compose",
    "evaluate",
    "group_from_spec",
    "hnf_basis",
    "ideal_lattice",
    "load_config",
    "marks",
    "multiply",
    "res_tr_formula",
    "restrict",
    "sp_invariants",
    "stabilization_index",
    "subgroup_classes",
    "subgroup_lattice",
    "t_class",
    "transfer",
]
