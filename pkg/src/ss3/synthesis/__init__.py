"""Isogeny-class catalog, Jacobian attainability, constructors and census."""

from ss3.synthesis.catalog import (
    AttainabilityVerdict,
    IsogenyClassSpec,
    contains_jacobian,
    enumerate_classes,
    predicted_set,
)
from ss3.synthesis.census import census
from ss3.synthesis.construct import (
    ConstructionError,
    NotAttainable,
    construct_cubic_type,
    construct_for_weil,
    construct_quadratic_type,
    construct_split,
    quartic_from_data,
)

__all__ = [
    "AttainabilityVerdict",
    "ConstructionError",
    "IsogenyClassSpec",
    "NotAttainable",
    "census",
    "construct_cubic_type",
    "construct_for_weil",
    "construct_quadratic_type",
    "construct_split",
    "contains_jacobian",
    "enumerate_classes",
    "predicted_set",
    "quartic_from_data",
]
