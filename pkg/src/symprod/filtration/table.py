"""Filtration tables: every stage n = 1..n_max of A(G)/I_n(G) for one group.

Stages are independent jobs. The runner dispatches them sequentially or
with bounded concurrency and always assembles the table in n order.
"""

from __future__ import annotations

import asyncio
import logging
from dataclasses import dataclass

from symprod.core.config import SymprodConfig
from symprod.core.exceptions import DomainError
from symprod.core.models import FiltrationTableDocument, StageDocument
from symprod.filtration.ideals import (
    augmentation_ideal,
    ideal_lattice,
    nested_pairs,
    sp_invariants,
    stabilization_index,
)
from symprod.groups.lattice import class_documents, subgroup_lattice
from symprod.groups.permgroup import PermGroup
from symprod.lattice.basis import AbelianInvariants, LatticeBasis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiltrationStage:
    """One row of a filtration table.

    Attributes:
        n: The stage.
        ideal: HNF basis of I_n(G).
        quotient: Invariants of A(G)/I_n(G).
    """

    n: int
    ideal: LatticeBasis
    quotient: AbelianInvariants

    def to_document(self) -> StageDocument:
        """Return the JSON document for this stage."""
        return StageDocument(n=self.n, ideal_rank=self.ideal.rank, quotient=self.quotient)


@dataclass(frozen=True)
class FiltrationTable:
    """The stages of the filtration of A(G) up to ``n_max``.

    Attributes:
        group: The group G.
        stages: One entry per n = 1..n_max, in order.
        stabilization_index: Least n with I_n(G) = I(G).
        augmentation_ideal: HNF basis of I(G).
    """

    group: PermGroup
    stages: tuple[FiltrationStage, ...]
    stabilization_index: int
    augmentation_ideal: LatticeBasis

    def stage(self, n: int) -> FiltrationStage:
        """Return the row for stage ``n``."""
        return self.stages[n - 1]

    def to_document(self) -> FiltrationTableDocument:
        """Return the JSON document for this table."""
        return FiltrationTableDocument(
            group=self.group.label,
            classes=class_documents(subgroup_lattice(self.group, self.group.order)),
            stages=tuple(s.to_document() for s in self.stages),
            stabilization=self.stabilization_index,
        )


def compute_stage(group: PermGroup, n: int) -> FiltrationStage:
    """Compute I_n(G) and its quotient invariants."""
    return FiltrationStage(n=n, ideal=ideal_lattice(group, n), quotient=sp_invariants(group, n))


class FiltrationRunner:
    """Builds filtration tables, optionally computing stages concurrently.

    Attributes:
        config: The configuration supplying bounds and runner settings.
    """

    def __init__(self, config: SymprodConfig | None = None) -> None:
        self._config = config or SymprodConfig()

    async def run(self, group: PermGroup, n_max: int | None = None) -> FiltrationTable:
        """Compute stages 1..n_max of the filtration of ``group``.

        Args:
            group: The group G.
            n_max: Last stage; defaults to |G|.

        Returns:
            The assembled table.

        Raises:
            ResourceBoundError: If |G| exceeds the configured bound.
            DomainError: If ``n_max`` < 1.
        """
        subgroup_lattice(group, self._config.limits.group_order_bound)
        last = group.order if n_max is None else n_max
        if last < 1:
            raise DomainError(f"max stage must be positive, got {last}")
        # Shared caches are filled before any job starts.
        nested_pairs(group, last)
        ideal = augmentation_ideal(group)

        stages_n = list(range(1, last + 1))
        if self._config.runner.parallel:
            stages = await self._run_parallel(group, stages_n)
        else:
            stages = [compute_stage(group, n) for n in stages_n]

        table = FiltrationTable(
            group=group,
            stages=tuple(stages),
            stabilization_index=stabilization_index(group),
            augmentation_ideal=ideal,
        )
        logger.info("%s: filtration table with %d stages", group.label, len(stages))
        return table

    async def _run_parallel(self, group: PermGroup, stages_n: list[int]) -> list[FiltrationStage]:
        """Compute stages in worker threads with a semaphore limit."""
        semaphore = asyncio.Semaphore(self._config.runner.max_workers)
        results: list[FiltrationStage] = [None] * len(stages_n)  # type: ignore[list-item]

        async def _run_with_semaphore(idx: int, n: int) -> None:
            async with semaphore:
                results[idx] = await asyncio.to_thread(compute_stage, group, n)

        async with asyncio.TaskGroup() as tg:
            for i, n in enumerate(stages_n):
                tg.create_task(_run_with_semaphore(i, n))

        return results


def build_table(group: PermGroup, n_max: int | None = None, config: SymprodConfig | None = None) -> FiltrationTable:
    """Synchronous wrapper around :class:`FiltrationRunner`."""
    return asyncio.run(FiltrationRunner(config).run(group, n_max))
