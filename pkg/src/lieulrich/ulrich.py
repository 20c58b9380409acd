"""Ulrich criterion, exhaustive classification and Weyl-dimension ranks.

Search soundness
----------------
Write ``d = dim G/P_k``.  There are exactly ``d`` Sing forms and each
contributes at most one integer to Sing(omega), so ``Sing(omega) = {1..d}``
holds iff every form evaluates to an integer in ``[1, d]`` and the ``d`` values
are pairwise distinct.  Every form equals ``(lambda_k + 1) + sum_{j != k}
(m_j / m_k)(lambda_j + 1)`` with non-negative multipliers, so for an
L-dominant weight each form is non-decreasing in every coordinate.

The simple-coroot form is ``lambda_k + 1``; requiring it in ``[1, d]`` gives
``0 <= lambda_k <= d - 1``.  The form of the highest coroot ``theta`` must be
at most ``d``: with every other coordinate at its minimum 0 this bounds each
``lambda_j`` by ``(d m_k(theta) - sum_i m_i(theta)) / m_j(theta)``.  Since
``theta`` has full support the resulting box is finite and contains every
Ulrich weight.

Inside the box the depth-first search prunes a partial assignment when

* the i-th smallest lower bound (free coordinates at 0) exceeds i, since the
  values 1..i need i distinct forms whose value is at most i; lower bounds
  only grow with a coordinate, so the scan over that coordinate stops there;
* a form whose coordinates are all assigned is non-integral, outside
  ``[1, d]`` or equal to another completed form;
* a form depending on a single free coordinate forces a residue class on it
  for integrality, and values outside the class are skipped.

Each rule only discards assignments that violate a necessary condition, so
the search returns every Ulrich weight.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm, prod
from typing import Sequence

import numpy as np

from .bwb import check_levi_dominant
from .rootsys import (
    DynkinType,
    InvariantError,
    RootSystem,
    Vec,
    build,
    dimension,
    fano_index,
    levi_coroots,
    pairing,
    radical_coroots,
)
from .sing import sing_forms, sing_set


@dataclass(frozen=True)
class UlrichCertificate:
    type: DynkinType
    k: int
    weight: Vec
    sing: tuple[int, ...]
    rank: int
    dim: int
    index: int

    def __post_init__(self) -> None:
        if self.sing != tuple(range(1, self.dim + 1)):
            raise InvariantError(f"certificate for {self.weight} has Sing {self.sing}")
        if self.rank < 1:
            raise InvariantError("rank must be positive")

    def to_json(self) -> dict:
        return {
            "variety": f"{self.type}/P{self.k}",
            "weight": list(self.weight),
            "sing": list(self.sing),
            "rank": self.rank,
            "dim": self.dim,
            "index": self.index,
        }

    @classmethod
    def from_json(cls, data: dict) -> UlrichCertificate:
        t, k = data["variety"].split("/P")
        return cls(
            DynkinType(t[0], int(t[1:])),
            int(k),
            tuple(data["weight"]),
            tuple(data["sing"]),
            data["rank"],
            data["dim"],
            data["index"],
        )


def is_ulrich(rs: RootSystem, k: int, weight: Sequence[int]) -> bool:
    """Sing(omega) == {1, ..., dim G/P_k}."""
    d = dimension(rs, k)
    return sing_set(rs, k, weight) == tuple(range(1, d + 1))


def ulrich_many(rs: RootSystem, k: int, weights) -> np.ndarray:
    """Vectorised :func:`is_ulrich` over rows of L-dominant weights."""
    rs.check_node(k)
    w = np.array(weights, dtype=np.int64).reshape(-1, rs.rank)
    if np.any(np.delete(w, k - 1, axis=1) < 0):
        raise ValueError("all weights must be L-dominant")
    prob = _Problem(rs, k)
    vals = w @ prob.A.T + prob.c
    integral = ~np.any(vals % prob.D, axis=1)
    return integral & np.all(np.sort(vals, axis=1) == prob.slots, axis=1)


def rank(rs: RootSystem, k: int, weight: Sequence[int]) -> int:
    """Rank of E_omega, the Weyl dimension of the Levi module V_L(omega)."""
    rs.check_node(k)
    rs.check_weight(weight)
    check_levi_dominant(rs, k, weight)
    shifted = tuple(x + 1 for x in weight)
    num = den = 1
    for cv in levi_coroots(rs, k):
        num *= pairing(rs, shifted, cv)
        den *= sum(cv)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise InvariantError(f"Weyl dimension {q} is not an integer")
    return int(q)


def certify(rs: RootSystem, k: int, weight: Sequence[int]) -> UlrichCertificate:
    weight = tuple(int(x) for x in weight)
    return UlrichCertificate(
        rs.type,
        k,
        weight,
        sing_set(rs, k, weight),
        rank(rs, k, weight),
        dimension(rs, k),
        fano_index(rs, k),
    )


@dataclass(frozen=True)
class SearchBox:
    lower: Vec
    upper: Vec

    @classmethod
    def for_variety(cls, rs: RootSystem, k: int) -> SearchBox:
        d = dimension(rs, k)
        if d == 0:
            raise InvariantError("G/P_k has dimension 0")
        theta = rs.highest_coroot
        slack = d * theta[k - 1] - sum(theta)
        upper = tuple(d - 1 if j == k - 1 else slack // m for j, m in enumerate(theta))
        if min(upper) < 0:
            raise InvariantError(f"negative search bound {upper}")
        return cls((0,) * rs.rank, upper)

    def size(self) -> int:
        return prod(u - l + 1 for l, u in zip(self.lower, self.upper))

    def points(self):
        return product(*(range(l, u + 1) for l, u in zip(self.lower, self.upper)))


class _Problem:
    """Integer-scaled Sing forms: value of form f is ``(c[f] + A[f] @ lam) / D``."""

    def __init__(self, rs: RootSystem, k: int):
        self.rs, self.k = rs, k
        cor = radical_coroots(rs, k)
        self.d = len(cor)
        self.D = lcm(*(cv[k - 1] for cv in cor))
        self.A = np.array([[self.D // cv[k - 1] * m for m in cv] for cv in cor], dtype=np.int64)
        self.c = self.A.sum(axis=1)
        self.box = SearchBox.for_variety(rs, k)
        theta = rs.highest_coroot
        # assign coordinates in descending highest-coroot multiplier, ties by index
        self.order = sorted(range(rs.rank), key=lambda j: (-theta[j], j))
        n = rs.rank
        pos = {j: p for p, j in enumerate(self.order)}
        # forms become fully determined at the depth of their last free coordinate
        last = [max(pos[j] for j in range(n) if self.A[f, j]) for f in range(self.d)]
        self.closing = [np.array([f for f in range(self.d) if last[f] == p], dtype=np.int64)
                        for p in range(n)]
        self.slots = (np.arange(self.d, dtype=np.int64) + 1) * self.D
        self.nodes = 0

    def candidates(self, p: int, lo: np.ndarray):
        """Admissible values for the coordinate at depth ``p``, increasing."""
        j = self.order[p]
        col = self.A[:, j]
        D = self.D
        upper = self.box.upper[j]
        active = col > 0
        room = (self.d * D - lo[active]) // col[active]
        upper = min(upper, int(room.min()))
        if upper < 0:
            return []
        closing = self.closing[p]
        residues = list(range(D))
        if len(closing):
            a, b = col[closing], lo[closing]
            residues = [r for r in range(D) if not np.any((b + a * r) % D)]
            if not residues:
                return []
        return [x for x in range(upper + 1) if x % D in residues] if D > 1 else range(upper + 1)

    def search(self, p: int, lo: np.ndarray, used: frozenset, lam: list, out: list) -> None:
        n = self.rs.rank
        if p == n:
            out.append(tuple(lam))
            return
        j = self.order[p]
        col = self.A[:, j]
        closing = self.closing[p]
        for x in self.candidates(p, lo):
            self.nodes += 1
            new = lo + x * col
            if np.any(np.sort(new) > self.slots):
                break
            vals = new[closing]
            if len(vals):
                if np.any(vals % self.D):
                    continue
                s = set(vals.tolist())
                if len(s) < len(vals) or not s.isdisjoint(used):
                    continue
                nused = used | s
            else:
                nused = used
            lam[j] = x
            self.search(p + 1, new, nused, lam, out)
            lam[j] = 0

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """Surviving assignments of the first ``depth`` coordinates (search order)."""
        out: list = []
        n = self.rs.rank

        def walk(p, lo, used, pref):
            if p == depth:
                out.append(tuple(pref))
                return
            col = self.A[:, self.order[p]]
            closing = self.closing[p]
            for x in self.candidates(p, lo):
                new = lo + x * col
                if np.any(np.sort(new) > self.slots):
                    break
                vals = new[closing]
                s = set(vals.tolist())
                if np.any(vals % self.D) or len(s) < len(vals) or not s.isdisjoint(used):
                    continue
                walk(p + 1, new, used | s, pref + [x])

        walk(0, self.c.copy(), frozenset(), [])
        return out if depth <= n else []

    def run_prefix(self, pref: Sequence[int]) -> list[Vec]:
        lo = self.c.copy()
        used: set = set()
        lam = [0] * self.rs.rank
        for p, x in enumerate(pref):
            j = self.order[p]
            lo = lo + x * self.A[:, j]
            used |= set(lo[self.closing[p]].tolist())
            lam[j] = x
        out: list = []
        self.search(len(pref), lo, frozenset(used), lam, out)
        return out


def _search_solutions(rs: RootSystem, k: int) -> list[Vec]:
    prob = _Problem(rs, k)
    out: list = []
    prob.search(0, prob.c.copy(), frozenset(), [0] * rs.rank, out)
    return out


def _worker(args) -> list[Vec]:
    t, k, prefixes = args
    prob = _Problem(build(t), k)
    out = []
    for pref in prefixes:
        out.extend(prob.run_prefix(pref))
    return out


def classify(rs: RootSystem, k: int, jobs: int | None = 1) -> list[UlrichCertificate]:
    """Every L-dominant omega with E_omega Ulrich on G/P_k, sorted by weight.

    ``jobs`` > 1 splits the top of the search tree over worker processes;
    ``None`` means one worker per logical core.  The result does not depend
    on ``jobs``.
    """
    rs.check_node(k)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1:
        sols = _search_solutions(rs, k)
    else:
        prob = _Problem(rs, k)
        depth = min(2, rs.rank)
        prefixes = prob.prefixes(depth)
        chunks = [prefixes[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = ex.map(_worker, [(rs.type, k, c) for c in chunks if c])
            sols = [s for part in parts for s in part]
    certs = []
    for w in sorted(set(sols)):
        if not is_ulrich(rs, k, w):
            raise InvariantError(f"search produced non-Ulrich weight {w}")
        certs.append(certify(rs, k, w))
    return certs


def classify_by_box(rs: RootSystem, k: int) -> list[Vec]:
    """Unpruned reference: test every point of the search box."""
    box = SearchBox.for_variety(rs, k)
    return sorted(w for w in box.points() if is_ulrich(rs, k, w))


def search_nodes(rs: RootSystem, k: int) -> int:
    """Number of search nodes visited by a sequential classification."""
    prob = _Problem(rs, k)
    prob.search(0, prob.c.copy(), frozenset(), [0] * rs.rank, [])
    return prob.nodes
