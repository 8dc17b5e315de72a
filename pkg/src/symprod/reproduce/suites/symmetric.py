"""Suites for the symmetric groups Σ₂, Σ₃, Σ₄ and Σ₅."""

from __future__ import annotations

import logging

from symprod.burnside.operations import restrict, transfer
from symprod.core.models import CheckResult
from symprod.filtration.ideals import coset_action_check, nested_pairs, t_class, t_n
from symprod.groups.homs import GroupHom, sign_hom
from symprod.groups.lattice import subgroup_lattice
from symprod.groups.selectors import select_subgroup
from symprod.reproduce.checks import TableChecker
from symprod.reproduce.suite import ExampleSuite, register_suite

logger = logging.getLogger(__name__)


def _coset_action_items(checker: TableChecker, group_name: str, max_index: int) -> list[CheckResult]:
    group = checker.group(group_name)
    lattice = subgroup_lattice(group, group.order)
    pairs = nested_pairs(group, max_index)
    failures = [
        f"class{p.inner} in class{p.outer}"
        for p in pairs
        if not coset_action_check(group, lattice.representative(p.outer), p.subgroup)
    ]
    return [checker.compare(f"tr_H(beta*(t_m)) = t_K^H, {len(pairs)} pairs of index <= {max_index}", [], failures)]


@register_suite
class Sigma2Suite(ExampleSuite):
    """The filtration of A(Σ₂) terminates at the second step."""

    @property
    def name(self) -> str:
        return "s2"

    @property
    def description(self) -> str:
        return "Sym(2): I_2 = I, freely generated by t_2"


@register_suite
class Sigma3Suite(ExampleSuite):
    """Σ₃: ranks 4, 2, 1 and the two identities for p*(t₂) and tr(t₂)."""

    @property
    def name(self) -> str:
        return "s3"

    @property
    def description(self) -> str:
        return "Sym(3): free quotients of ranks 4, 2, 1"

    def extra_checks(self, checker: TableChecker) -> list[CheckResult]:
        group = checker.group("S3")
        pulled = restrict(sign_hom(group), t_n(2))
        expected_pull = checker.element(group, [[1, "whole", "gens:(1 2 3)"]])

        sigma2 = select_subgroup(group, "gens:(1 2)").as_group()
        pushed = transfer(group, sigma2, t_class(sigma2, sigma2.whole(), sigma2.trivial()))
        expected_push = checker.element(group, [[1, "whole", "trivial"], [-2, "whole", "gens:(1 2)"]])
        return [
            checker.compare("p*(t_2) = t_A3^S3", list(expected_pull.coeffs), list(pulled.coeffs)),
            checker.compare("tr_S2^S3(t_2) = t_e^S3 - 2 t_S2^S3", list(expected_push.coeffs), list(pushed.coeffs)),
            *_coset_action_items(checker, "S3", 3),
        ]


@register_suite
class Sigma4Suite(ExampleSuite):
    """Σ₄: torsion ℤ/3 at n = 3 from the relation 3·t₄ ∈ I₃(Σ₄)."""

    @property
    def name(self) -> str:
        return "s4"

    @property
    def description(self) -> str:
        return "Sym(4): quotients 11; 3; 1+Z/3; 1"

    def extra_checks(self, checker: TableChecker) -> list[CheckResult]:
        group = checker.group("S4")
        pulled = restrict(sign_hom(group), t_n(2))
        expected = checker.element(group, [[1, "whole", "gens:(1 2 3),(1 2)(3 4)"]])
        return [
            checker.compare("sign*(t_2) = t_A4^S4", list(expected.coeffs), list(pulled.coeffs)),
            *_coset_action_items(checker, "S4", 4),
        ]


@register_suite
class Sigma5Suite(ExampleSuite):
    """Σ₅: I₅(Σ₅) ≠ I(Σ₅) because t_B restricts to t_{D₅}^{A₅} ∉ I₅(A₅)."""

    @property
    def name(self) -> str:
        return "s5"

    @property
    def description(self) -> str:
        return "Sym(5): stabilization at n = 6"

    def extra_checks(self, checker: TableChecker) -> list[CheckResult]:
        group = checker.group("S5")
        affine = select_subgroup(group, "gens:(1 2 3 4 5),(2 3 5 4)")
        alternating = select_subgroup(group, "gens:(1 2 3),(2 3 4),(3 4 5)").as_group()
        restricted = restrict(GroupHom.inclusion(alternating, group), t_class(group, group.whole(), affine))
        dihedral = select_subgroup(alternating, "gens:(1 2 3 4 5),(2 5)(3 4)")
        expected = t_class(alternating, alternating.whole(), dihedral)
        logger.debug("Restricted t_B to %s", alternating.label)
        return [checker.compare("res_A5(t_B^S5) = t_D5^A5", list(expected.coeffs), list(restricted.coeffs))]
