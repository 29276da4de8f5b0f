"""Exact solvers and verification tools for graph-tiling extremal problems.

Submodules:

* ``graphs``         -- bitset graphs, blowups, edge-list text format
* ``patterns``       -- the H / Hhat / K2 patterns, copy enumeration,
                        covering numbers, rigidity
* ``tiling``         -- exact maximum tiling and mixed-coverage solvers,
                        blowup tiling schedules and lifts
* ``simplex``        -- exact quadratic maximization over a simplex
* ``constructions``  -- extremal constructions, density formulas, and the
                        conjecture-refutation demo
* ``extendability``  -- two-copy pair configurations and exhaustive/sampled
                        verification of the local edge-bound lemmas
* ``fixtures``       -- curated decomposition fixtures with a negative
                        control
* ``cli``            -- batch command-line interface
"""

__version__ = "0.1.0"

from .graphs import SmallGraph, GraphBuilder, blowup, degree_stats
from .patterns import (
    Embedding,
    Pattern,
    enumerate_copies,
    covering_number,
    is_rigid,
    pattern_h,
    pattern_hhat,
    pattern_k2,
)
from .tiling import (
    MixedCoverResult,
    Tiling,
    TilingResult,
    covering_ratio,
    find_h_in_dense,
    hhat_blowup_tiling,
    lift_tiling,
    max_mixed_cover,
    max_tiling,
)
from .simplex import SimplexPoint, psi, psi_star, psi_star_grid
from .constructions import ConstructionSpec, xi, xi_blowup, verify_construction_matching

__all__ = [
    "SmallGraph",
    "GraphBuilder",
    "blowup",
    "degree_stats",
    "Embedding",
    "Pattern",
    "enumerate_copies",
    "covering_number",
    "is_rigid",
    "pattern_h",
    "pattern_hhat",
    "pattern_k2",
    "Tiling",
    "TilingResult",
    "MixedCoverResult",
    "max_tiling",
    "max_mixed_cover",
    "covering_ratio",
    "hhat_blowup_tiling",
    "lift_tiling",
    "find_h_in_dense",
    "SimplexPoint",
    "psi",
    "psi_star",
    "psi_star_grid",
    "xi",
    "xi_blowup",
    "ConstructionSpec",
    "verify_construction_matching",
]
