"""Python bindings for the aslab C++ core.

Rationals come back as fractions.Fraction, big integers as int.
"""

from ._core import (
    BudgetExceeded,
    CheckFailed,
    as_genus,
    as_prank,
    evaluation_budget,
    field_info,
    genus_X,
    hodge_slopes,
    index_conjecture,
    iso_gram,
    iso_lattice,
    iso_point_height,
    noniso_gram,
    noniso_lattice,
    preset_rank,
    self_dual_orbit_count,
    set_threads,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CheckFailed",
    "as_genus",
    "as_prank",
    "evaluation_budget",
    "field_info",
    "genus_X",
    "hodge_slopes",
    "index_conjecture",
    "iso_gram",
    "iso_lattice",
    "iso_point_height",
    "noniso_gram",
    "noniso_lattice",
    "preset_rank",
    "self_dual_orbit_count",
    "set_threads",
    "zeta",
]
