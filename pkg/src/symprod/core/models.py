"""Serialized documents emitted by the CLI and the reproduction suites.

Every document is a frozen pydantic model. JSON is produced with
``model_dump_json()``, whose field order follows the class definition,
so identical inputs give identical bytes.
"""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from symprod.lattice.basis import AbelianInvariants

# ── Enumerations ──


class CheckStatus(StrEnum):
    """Outcome of a single reproduction line item."""

    PASSED = "pass"
    FAILED = "fail"
    ERROR = "error"


# ── Burnside ring and subgroup documents ──


class BurnsideElementDocument(BaseModel):
    """An element of A(G) in the subgroup-class basis.

    Attributes:
        group: Spec string of G.
        coeffs: Coefficients in basis order.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    group: str
    coeffs: tuple[int, ...]


class SubgroupClassDocument(BaseModel):
    """Descriptor of one conjugacy class of subgroups.

    Attributes:
        position: Index in the deterministic class list.
        order: Order of the subgroups in the class.
        index: Index in G.
        class_size: Number of conjugates.
        normalizer_order: Order of the normalizer of the representative.
        weyl_order: Order of the Weyl group.
        generators: Generators of the representative in cycle notation.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    position: int = Field(ge=0)
    order: int = Field(ge=1)
    index: int = Field(ge=1)
    class_size: int = Field(ge=1)
    normalizer_order: int = Field(ge=1)
    weyl_order: int = Field(ge=1)
    generators: tuple[str, ...]


class SubgroupsDocument(BaseModel):
    """All subgroup classes of a group."""

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    group: str
    order: int = Field(ge=1)
    subgroup_count: int = Field(ge=1)
    classes: tuple[SubgroupClassDocument, ...]


class DoubleCosetCheckDocument(BaseModel):
    """Result of checking the double coset formula on every pair of classes.

    Attributes:
        group: Spec string of G.
        pairs_checked: Number of (K, H) pairs compared.
        failures: Descriptions of the pairs where the two sides differ.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    group: str
    pairs_checked: int = Field(ge=0)
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        """Return True when no pair failed."""
        return not self.failures


class MarkTableDocument(BaseModel):
    """The table of marks of a group.

    Attributes:
        group: Spec string of G.
        classes: Subgroup classes in basis order.
        marks: Row L, column H: the number of L-fixed points of G/H.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    group: str
    classes: tuple[SubgroupClassDocument, ...]
    marks: tuple[tuple[int, ...], ...]


# ── Filtration documents ──


class StageDocument(BaseModel):
    """One stage n of the filtration: I_n(G) and A(G)/I_n(G)."""

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    n: int = Field(ge=1)
    ideal_rank: int = Field(ge=0)
    quotient: AbelianInvariants


class FiltrationTableDocument(BaseModel):
    """The full filtration table of a group."""

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    group: str
    classes: tuple[SubgroupClassDocument, ...]
    stages: tuple[StageDocument, ...]
    stabilization: int = Field(ge=1)


class MembershipDocument(BaseModel):
    """Answer to a membership or saturation query.

    Attributes:
        group: Spec string of G.
        n: Filtration stage.
        element: The queried vector.
        member: Whether the vector lies in the lattice (or its saturation).
        coordinates: Coefficients over the HNF basis when it is a member.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    group: str
    n: int = Field(ge=1)
    element: tuple[int, ...]
    member: bool
    coordinates: tuple[int, ...] | None = None


# ── Category documents ──


class CatTermDocument(BaseModel):
    """One basis pair (L, α) with its coefficient."""

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    L_order: int = Field(ge=1)  # noqa: N815
    L_gens: tuple[str, ...]  # noqa: N815
    alpha_images: tuple[str, ...]
    coeff: int


class CatMorphismDocument(BaseModel):
    """A morphism of A(G, K) over the canonical pair basis."""

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    source: str
    target: str
    terms: tuple[CatTermDocument, ...]


class CategoryBasisDocument(BaseModel):
    """The canonical basis of A(G, K)."""

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    source: str
    target: str
    pairs: tuple[CatTermDocument, ...]


class ComposeCheckDocument(BaseModel):
    """Result of checking the category laws on sampled basis pairs.

    Attributes:
        source: Spec string of G.
        middle: Spec string of K.
        target: Spec string of L.
        seed: Sampling seed.
        compositions_checked: Number of (f, g) pairs composed.
        failures: Descriptions of the laws that failed.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    source: str
    middle: str
    target: str
    seed: int
    compositions_checked: int = Field(ge=0)
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        """Return True when every law held."""
        return not self.failures


# ── Checks and reproduction ──


class CheckResult(BaseModel):
    """One line item of a reproduction or property check.

    Attributes:
        suite: Suite (example id) the item belongs to.
        name: Short description of the item.
        status: Pass, fail or error.
        expected: Expected value rendered as text.
        actual: Computed value rendered as text.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    suite: str
    name: str
    status: CheckStatus
    expected: str = ""
    actual: str = ""

    @property
    def passed(self) -> bool:
        """Return True when the item passed."""
        return self.status == CheckStatus.PASSED


class ReproduceReport(BaseModel):
    """Aggregated results of one or more reproduction suites."""

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    examples: tuple[str, ...]
    results: tuple[CheckResult, ...]
    passed: int = Field(ge=0)
    failed: int = Field(ge=0)

    @property
    def all_passed(self) -> bool:
        """Return True when every line item passed."""
        return self.failed == 0
