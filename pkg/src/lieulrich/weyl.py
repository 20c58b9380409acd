"""Simple reflections on weights and reduction to the dominant chamber."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .rootsys import RootSystem, Vec, pairing


@dataclass(frozen=True)
class DominanceResult:
    """Outcome of reducing a (rho-shifted) weight to the dominant chamber.

    For a regular weight ``dominant`` is the strictly dominant representative
    of its Weyl orbit and ``length`` the length of the reducing element.
    Both are ``None`` when the weight is singular.
    """

    singular: bool
    dominant: Vec | None = None
    length: int | None = None

    @property
    def regular(self) -> bool:
        return not self.singular


SINGULAR = DominanceResult(True)


def reflect(rs: RootSystem, weight: Sequence[int], i: int) -> Vec:
    """Apply the simple reflection ``s_i`` (1-based) to a weight.

    In fundamental coordinates ``s_i(lambda)_j = lambda_j - lambda_i C[i][j]``.
    """
    rs.check_node(i)
    rs.check_weight(weight)
    row = rs.cartan[i - 1]
    c = weight[i - 1]
    return tuple(x - c * row[j] for j, x in enumerate(weight))


def to_dominant(rs: RootSystem, mu: Sequence[int]) -> DominanceResult:
    """Reduce ``mu`` (already shifted by rho) to its dominant representative.

    Reflects at the smallest index with a negative coordinate until none is
    left.  A zero coordinate at any stage means ``mu`` lies on a wall.
    """
    rs.check_weight(mu)
    cartan = rs.cartan
    w = list(mu)
    length = 0
    while True:
        if 0 in w:
            return SINGULAR
        for i, c in enumerate(w):
            if c < 0:
                break
        else:
            return DominanceResult(False, tuple(w), length)
        row = cartan[i]
        for j in range(len(w)):
            w[j] -= c * row[j]
        length += 1


def reduce_with_order(rs: RootSystem, mu: Sequence[int], choose) -> DominanceResult:
    """Like :func:`to_dominant` but ``choose(negatives)`` picks the next node.

    Any choice among negative coordinates reaches the same chamber in the same
    number of steps; used to test that claim.
    """
    w = tuple(mu)
    length = 0
    while True:
        if 0 in w:
            return SINGULAR
        neg = [i + 1 for i, c in enumerate(w) if c < 0]
        if not neg:
            return DominanceResult(False, w, length)
        w = reflect(rs, w, choose(neg))
        length += 1


def is_singular(rs: RootSystem, mu: Sequence[int]) -> bool:
    """True iff ``mu`` is orthogonal to some positive root."""
    return any(pairing(rs, mu, cv) == 0 for cv in rs.coroots)


def to_dominant_many(rs: RootSystem, mus) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised :func:`to_dominant` over the rows of ``mus``.

    Returns ``(singular, dominant, length)``; rows flagged singular carry
    meaningless ``dominant`` and ``length`` entries.
    """
    w = np.array(mus, dtype=np.int64, copy=True).reshape(-1, rs.rank)
    cartan = np.array(rs.cartan, dtype=np.int64)
    length = np.zeros(len(w), dtype=np.int64)
    singular = (w == 0).any(axis=1)
    todo = np.flatnonzero(~singular & (w < 0).any(axis=1))
    while len(todo):
        sub = w[todo]
        i = np.argmax(sub < 0, axis=1)
        c = sub[np.arange(len(todo)), i]
        sub -= c[:, None] * cartan[i]
        w[todo] = sub
        length[todo] += 1
        zero = (sub == 0).any(axis=1)
        singular[todo[zero]] = True
        todo = todo[~zero & (sub < 0).any(axis=1)]
    return singular, w, length
