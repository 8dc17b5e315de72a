"""Finite permutation groups: construction, subgroup lattices, double cosets, homomorphisms."""

from symprod.groups.homs import (
    GroupHom,
    coset_action_hom,
    enumerate_homs,
    left_cosets,
    sign_hom,
)
from symprod.groups.lattice import (
    SubgroupClass,
    SubgroupLattice,
    class_documents,
    conjugator,
    double_cosets,
    is_conjugate,
    min_proper_index,
    normalizer,
    subgroup_classes,
    subgroup_lattice,
    subgroups_document,
)
from symprod.groups.parser import group_from_spec, parse_perm, symmetric_group
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup, Subgroup
from symprod.groups.selectors import parse_vector, select_subgroup, select_subgroups

__all__ = [
    "GroupHom",
    "Perm",
    "PermGroup",
    "Subgroup",
    "SubgroupClass",
    "SubgroupLattice",
    "class_documents",
    "conjugator",
    "coset_action_hom",
    "double_cosets",
    "enumerate_homs",
    "group_from_spec",
    "is_conjugate",
    "left_cosets",
    "min_proper_index",
    "normalizer",
    "parse_vector",
    "parse_perm",
    "select_subgroup",
    "select_subgroups",
    "sign_hom",
    "subgroup_classes",
    "subgroup_lattice",
    "subgroups_document",
    "symmetric_group",
]
