"""Borel-Weil-Bott cohomology of irreducible equivariant bundles on G/P_k."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .rootsys import InvariantError, RootSystem, Vec, dimension
from .weyl import to_dominant, to_dominant_many


@dataclass(frozen=True)
class BundleSpec:
    """The bundle E_omega on G/P_k; ``weight`` must be L-dominant."""

    rs: RootSystem
    k: int
    weight: Vec

    def __post_init__(self) -> None:
        self.rs.check_node(self.k)
        self.rs.check_weight(self.weight)
        object.__setattr__(self, "weight", tuple(int(x) for x in self.weight))
        check_levi_dominant(self.rs, self.k, self.weight)


def check_levi_dominant(rs: RootSystem, k: int, weight: Sequence[int]) -> None:
    bad = [j + 1 for j, x in enumerate(weight) if j != k - 1 and x < 0]
    if bad:
        raise ValueError(
            f"weight {tuple(weight)} is not L-dominant for P_{k}: negative coefficient at node(s) {bad}"
        )


@dataclass(frozen=True)
class CohomologyResult:
    """Either total vanishing, or one nonzero degree.

    ``dual_highest_weight`` is ``w(omega + rho) - rho``: the cohomology in
    ``degree`` is the dual of the G-module with that highest weight.
    """

    degree: int | None = None
    dual_highest_weight: Vec | None = None

    @property
    def vanishes(self) -> bool:
        return self.degree is None


VANISHING = CohomologyResult()


def cohomology(spec: BundleSpec, twist: int = 0) -> CohomologyResult:
    """Cohomology of ``E_omega(-twist)`` on G/P_k."""
    rs, k = spec.rs, spec.k
    mu = tuple(x - twist * (j == k - 1) + 1 for j, x in enumerate(spec.weight))
    res = to_dominant(rs, mu)
    if res.singular:
        return VANISHING
    hw = tuple(x - 1 for x in res.dominant)
    if min(hw) < 0:
        raise InvariantError(f"non-dominant highest weight {hw}")
    return CohomologyResult(res.length, hw)


def is_ulrich_by_cohomology(spec: BundleSpec) -> bool:
    """Check the Ulrich vanishing condition twist by twist."""
    d = dimension(spec.rs, spec.k)
    return all(cohomology(spec, t).vanishes for t in range(1, d + 1))


def ulrich_by_cohomology_many(rs: RootSystem, k: int, weights) -> np.ndarray:
    """Vectorised :func:`is_ulrich_by_cohomology` over rows of L-dominant weights."""
    rs.check_node(k)
    w = np.array(weights, dtype=np.int64).reshape(-1, rs.rank)
    if np.any(np.delete(w, k - 1, axis=1) < 0):
        raise ValueError("all weights must be L-dominant")
    alive = np.ones(len(w), dtype=bool)
    for t in range(1, dimension(rs, k) + 1):
        idx = np.flatnonzero(alive)
        if not len(idx):
            break
        mu = w[idx] + 1
        mu[:, k - 1] -= t
        singular, _, _ = to_dominant_many(rs, mu)
        alive[idx[~singular]] = False
    return alive
