"""Reproduction of the worked examples: Σ₂, Σ₃, Σ₄, A₅, Σ₅ and p-groups."""

from symprod.reproduce.suite import (
    ExampleSuite,
    ReproductionRunner,
    get_registered_suites,
    register_suite,
    reproduce,
)
from symprod.reproduce.suites import alternating, pgroups, symmetric  # noqa: F401

__all__ = [
    "ExampleSuite",
    "ReproductionRunner",
    "get_registered_suites",
    "register_suite",
    "reproduce",
]
