"""Root data for simple Lie algebras in Bourbaki numbering.

Everything is kept in lattice coordinates: roots in the simple-root basis,
coroots in the simple-coroot basis and weights in the fundamental-weight
basis.  With these choices every pairing is an integer dot product and no
irrational orthonormal coordinates are ever needed.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

Vec = tuple[int, ...]

SERIES = "ABCDEFG"


class InvariantError(AssertionError):
    """Raised when a structural identity that must always hold is violated."""


@dataclass(frozen=True, order=True)
class DynkinType:
    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in SERIES:
            raise ValueError(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        r, s = self.rank, self.series
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[s]
        if not ok:
            raise ValueError(f"rank {r} is not admissible for series {s}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _edges(t: DynkinType) -> list[tuple[int, int, int]]:
    """Return (i, j, m) with 0-based nodes: C[i][j] = -m, C[j][i] = -1.

    ``m > 1`` means the multiple edge points from node i towards node j,
    i.e. alpha_i is long and alpha_j short.
    """
    n = t.rank
    s = t.series
    chain = [(i, i + 1, 1) for i in range(n - 1)]
    if s == "A":
        return chain
    if s == "B":
        return chain[:-1] + [(n - 2, n - 1, 2)]
    if s == "C":
        return chain[:-1] + [(n - 1, n - 2, 2)]
    if s == "D":
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
    if s == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        return [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, n - 1)]
    if s == "F":
        return [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
    # G2: alpha_1 short, alpha_2 long
    return [(1, 0, 3)]


def cartan_matrix(t: DynkinType) -> tuple[Vec, ...]:
    """Cartan matrix with ``C[i][j] = (alpha_i, alpha_j^vee)``."""
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, m in _edges(t):
        c[i][j] = -m
        c[j][i] = -1
    return tuple(tuple(row) for row in c)


def symmetrizer(cartan: Sequence[Sequence[int]]) -> Vec:
    """Positive integers ``d`` with ``C[i][j] d_j = C[j][i] d_i``, min 1.

    ``d_i = (alpha_i, alpha_i) / 2`` when short roots have squared length 2,
    so ``C[i][j] d_j = (alpha_i, alpha_j)``.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and cartan[i][j] != 0:
                if cartan[j][i] == 0:
                    raise InvariantError("Cartan matrix zero pattern is not symmetric")
                dj = d[i] * cartan[j][i] / cartan[i][j]
                if d[j] is None:
                    d[j] = dj
                    queue.append(j)
                elif d[j] != dj:
                    raise InvariantError("Cartan matrix is not symmetrizable")
    if any(x is None for x in d):
        raise InvariantError("Dynkin diagram is not connected")
    low = min(d)
    scaled = [x / low for x in d]
    denom = lcm(*(x.denominator for x in scaled))
    return tuple(int(x * denom) for x in scaled)


def _pair_root_coroot(cartan, root: Sequence[int], i: int) -> int:
    # (alpha, alpha_i^vee) for alpha in simple-root coordinates
    return sum(n_l * cartan[l][i] for l, n_l in enumerate(root))


def _height_key(v: Vec) -> tuple[int, Vec]:
    return (sum(v), v)


def _positive_roots(cartan) -> list[Vec]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        a = queue.popleft()
        for i in range(n):
            p = _pair_root_coroot(cartan, a, i)
            b = tuple(x - p * (l == i) for l, x in enumerate(a))
            if all(x >= 0 for x in b) and any(b) and b not in seen:
                seen.add(b)
                queue.append(b)
    return sorted(seen, key=_height_key)


def root_norm(cartan, sym: Sequence[int], root: Sequence[int]) -> int:
    """Squared length (alpha, alpha) with short roots normalised to 2."""
    n = len(cartan)
    return sum(root[i] * root[j] * cartan[i][j] * sym[j] for i in range(n) for j in range(n))


def coroot_of(cartan, sym: Sequence[int], root: Sequence[int]) -> Vec:
    norm = root_norm(cartan, sym, root)
    out = []
    for i, n_i in enumerate(root):
        q, r = divmod(2 * sym[i] * n_i, norm)
        if r:
            raise InvariantError(f"non-integral coroot coordinate for root {tuple(root)}")
        out.append(q)
    return tuple(out)


EXPECTED_POSITIVE_ROOTS = {"E": {6: 36, 7: 63, 8: 120}, "F": {4: 24}, "G": {2: 6}}


def expected_positive_root_count(t: DynkinType) -> int:
    n = t.rank
    if t.series == "A":
        return n * (n + 1) // 2
    if t.series in "BC":
        return n * n
    if t.series == "D":
        return n * (n - 1)
    return EXPECTED_POSITIVE_ROOTS[t.series][n]


@dataclass(frozen=True)
class RootSystem:
    """Immutable root data for one simple type.

    ``positive_roots`` holds ``(root, coroot)`` pairs sorted by root height,
    then lexicographically.
    """

    type: DynkinType
    cartan: tuple[Vec, ...]
    symmetrizer: Vec
    positive_roots: tuple[tuple[Vec, Vec], ...]
    highest_coroot: Vec
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def rho(self) -> Vec:
        return (1,) * self.rank

    @property
    def roots(self) -> tuple[Vec, ...]:
        return tuple(r for r, _ in self.positive_roots)

    @property
    def coroots(self) -> tuple[Vec, ...]:
        return tuple(c for _, c in self.positive_roots)

    def check_node(self, k: int) -> None:
        if not isinstance(k, int) or not 1 <= k <= self.rank:
            raise ValueError(f"node index {k} out of range 1..{self.rank}")

    def check_weight(self, weight: Sequence[int]) -> None:
        if len(weight) != self.rank:
            raise ValueError(f"weight has {len(weight)} coordinates, expected {self.rank}")

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "cartan": [list(row) for row in self.cartan],
            "symmetrizer": list(self.symmetrizer),
            "roots": [list(r) for r in self.roots],
            "coroots": [list(c) for c in self.coroots],
        }


_CACHE: dict[DynkinType, RootSystem] = {}


def build(t: DynkinType | str, rank: int | None = None) -> RootSystem:
    """Build and validate the root system of type ``t``.

    Accepts a :class:`DynkinType` or a series letter plus rank::

        >>> len(build("G", 2).positive_roots)
        6
    """
    if not isinstance(t, DynkinType):
        t = DynkinType(t, rank)
    if t in _CACHE:
        return _CACHE[t]
    cartan = cartan_matrix(t)
    sym = symmetrizer(cartan)
    roots = _positive_roots(cartan)
    pairs = tuple((r, coroot_of(cartan, sym, r)) for r in roots)
    highest = max((c for _, c in pairs), key=_height_key)
    rs = RootSystem(t, cartan, sym, pairs, highest)
    validate(rs)
    _CACHE[t] = rs
    return rs


def validate(rs: RootSystem) -> None:
    """Check the structural identities of ``rs``; raise InvariantError otherwise."""
    c, n = rs.cartan, rs.rank
    for i in range(n):
        if c[i][i] != 2:
            raise InvariantError("Cartan diagonal must be 2")
        for j in range(n):
            if i != j and (c[i][j] > 0 or (c[i][j] == 0) != (c[j][i] == 0)):
                raise InvariantError("bad off-diagonal Cartan entry")
            if c[i][j] * rs.symmetrizer[j] != c[j][i] * rs.symmetrizer[i]:
                raise InvariantError("symmetrizer does not symmetrize")
    if not set(rs.symmetrizer) <= {1, 2, 3} or min(rs.symmetrizer) != 1:
        raise InvariantError(f"unexpected symmetrizer {rs.symmetrizer}")
    if len(rs.positive_roots) != expected_positive_root_count(rs.type):
        raise InvariantError(f"{rs.type}: wrong number of positive roots")
    for j in range(n):
        two_rho = sum(_pair_root_coroot(c, r, j) for r in rs.roots)
        if two_rho != 2:
            raise InvariantError(f"2rho identity fails at node {j + 1}")
    for r, cv in rs.positive_roots:
        if min(cv) < 0 or not any(cv):
            raise InvariantError(f"coroot of {r} is not positive")
        if sum(r) == 1 and cv != r:
            raise InvariantError("simple coroot is not a unit vector")
    if min(rs.highest_coroot) < 1:
        raise InvariantError("highest coroot not strictly positive")


def pairing(rs: RootSystem, weight: Sequence[int], coroot: Sequence[int]) -> int:
    """``(lambda, alpha^vee)`` for a weight in fundamental coordinates."""
    if len(weight) != rs.rank or len(coroot) != rs.rank:
        raise ValueError(f"dimension mismatch: expected vectors of length {rs.rank}")
    return sum(m * x for m, x in zip(coroot, weight))


def dual(rs: RootSystem) -> RootSystem:
    """Root system of the transposed Cartan matrix (generic construction).

    Built directly from the transpose rather than by relabelling series, so it
    can serve as an independent check on coroot computation.
    """
    cartan = tuple(tuple(rs.cartan[j][i] for j in range(rs.rank)) for i in range(rs.rank))
    sym = symmetrizer(cartan)
    roots = _positive_roots(cartan)
    pairs = tuple((r, coroot_of(cartan, sym, r)) for r in roots)
    highest = max((cv for _, cv in pairs), key=_height_key)
    return RootSystem(rs.type, cartan, sym, pairs, highest)


def radical_coroots(rs: RootSystem, k: int) -> tuple[Vec, ...]:
    """Coroots of the positive roots involving ``alpha_k``; there are dim G/P_k of them."""
    rs.check_node(k)
    idx = ("radical", k)
    if idx not in rs._index:
        rs._index[idx] = tuple(cv for r, cv in rs.positive_roots if r[k - 1] > 0)
    return rs._index[idx]


def levi_coroots(rs: RootSystem, k: int) -> tuple[Vec, ...]:
    rs.check_node(k)
    return tuple(cv for r, cv in rs.positive_roots if r[k - 1] == 0)


def dimension(rs: RootSystem, k: int) -> int:
    return len(radical_coroots(rs, k))


def fano_index(rs: RootSystem, k: int) -> int:
    """Fano index of G/P_k: the sum of radical roots is ``index * omega_k``."""
    rs.check_node(k)
    n = rs.rank
    total = [0] * n
    for r in rs.roots:
        if r[k - 1] > 0:
            for j in range(n):
                total[j] += _pair_root_coroot(rs.cartan, r, j)
    if any(total[j] for j in range(n) if j != k - 1):
        raise InvariantError(f"sum of radical roots is not a multiple of omega_{k}: {total}")
    return total[k - 1]


def exceptional_cases() -> list[tuple[DynkinType, int]]:
    """All 27 exceptional (type, node) pairs in the fixed order G2, F4, E6, E7, E8."""
    out = []
    for s, r in (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)):
        t = DynkinType(s, r)
        out.extend((t, k) for k in range(1, r + 1))
    return out
