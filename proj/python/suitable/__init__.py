"""Suitable cores of permutation arrays: verification and constructions."""

from ._suitable import (
    BuildError,
    CapExceeded,
    Error,
    InvalidArgument,
    array_to_core,
    bounds,
    build_packing,
    c_pre,
    construct,
    core_to_array,
    exhaustive_nonexistence,
    is_suitable_array,
    johnson_d_l43,
    plan,
    run_cli,
    search_coloring,
    validate_packing,
    validate_ramsey_coloring,
    verify,
)

__all__ = [
    "BuildError",
    "CapExceeded",
    "Error",
    "InvalidArgument",
    "array_to_core",
    "bounds",
    "build_packing",
    "c_pre",
    "construct",
    "core_to_array",
    "exhaustive_nonexistence",
    "is_suitable_array",
    "johnson_d_l43",
    "plan",
    "run_cli",
    "search_coloring",
    "validate_packing",
    "validate_ramsey_coloring",
    "verify",
]
