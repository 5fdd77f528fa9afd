"""One-orbit cyclic subspace codes over finite field towers.

Exact arithmetic in F_p < F_q < F_{q^n}, canonical F_q-subspaces, orbit
weight distributions, the two full-weight-spectrum families and exhaustive
verification engines.
"""

from __future__ import annotations

from .errors import Falsification, GuardError
from .gf_tower import FieldTower, build_tower, tower_for
from .orbit_code import OrbitCode, WeightDistribution, distance, is_fws, is_r_fws, min_distance, orbit, weight_distribution
from .subspace import Subspace, dual, intersect, shift, span_of, sum_subspaces

__all__ = [
    "Falsification",
    "FieldTower",
    "GuardError",
    "OrbitCode",
    "Subspace",
    "WeightDistribution",
    "build_tower",
    "distance",
    "dual",
    "intersect",
    "is_fws",
    "is_r_fws",
    "min_distance",
    "orbit",
    "shift",
    "span_of",
    "sum_subspaces",
    "tower_for",
    "weight_distribution",
]

__version__ = "0.1.0"
