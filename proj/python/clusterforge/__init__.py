"""Exact cluster-algebra engine.

Seed mutation and exchange-graph exploration over exact Laurent polynomial
arithmetic, quiver Grassmannian point counting over prime fields, and the
cluster character map, with machine verification suites for the structural
identities (exchange relation, denominators, bijections, connectivity).
"""

from ._core import (
    BudgetExceededError,
    LaurentPoly,
    NonIntegralInterpolationError,
    NotDivisibleError,
    Seed,
    cluster_character,
    cluster_variables,
    explore,
    gaussian_binomial,
    initial_seed,
    is_weakly_positive_sufficient,
    presets,
    sup_vector,
    verify,
)

__all__ = [
    "BudgetExceededError",
    "LaurentPoly",
    "NonIntegralInterpolationError",
    "NotDivisibleError",
    "Seed",
    "cluster_character",
    "cluster_variables",
    "explore",
    "gaussian_binomial",
    "initial_seed",
    "is_weakly_positive_sufficient",
    "presets",
    "sup_vector",
    "verify",
]

__version__ = "0.1.0"
