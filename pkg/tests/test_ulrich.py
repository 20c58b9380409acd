import itertools
import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieulrich import (
    InvariantError,
    SearchBox,
    UlrichCertificate,
    build,
    classify,
    dimension,
    is_ulrich,
    rank,
    sing_forms,
    sing_set,
)
from lieulrich.ulrich import certify, classify_by_box, ulrich_many

from conftest import ALL_TYPES, EXCEPTIONAL_CASES

E6_MIRROR = (6, 2, 5, 4, 3, 1)
KNOWN = {("E", 6, 1): [(0, 0, 0, 0, 1, 3)], ("E", 7, 1): [(0, 0, 0, 0, 1, 3, 8)], ("E", 6, 6): [(3, 0, 1, 0, 0, 0)]}


def factor(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def test_is_ulrich_examples():
    assert is_ulrich(build("E", 6), 1, (0, 0, 0, 0, 1, 3))
    assert is_ulrich(build("B", 3), 1, (0, 0, 1))
    assert not is_ulrich(build("E", 6), 1, (0,) * 6)


@given(st.integers(-10, 30), st.integers(0, 30))
def test_g2_p1_never_ulrich(a, b):
    assert not is_ulrich(build("G", 2), 1, (a, b))


def test_is_ulrich_rejects_non_levi_dominant():
    with pytest.raises(ValueError):
        is_ulrich(build("E", 6), 1, (0, -1, 0, 0, 0, 0))


@pytest.mark.parametrize("s,r,k", EXCEPTIONAL_CASES)
def test_exceptional_classification(s, r, k):
    rs = build(s, r)
    got = [c.weight for c in classify(rs, k)]
    assert got == KNOWN.get((s, r, k), [])


def test_e6_diagram_mirror():
    rs = build("E", 6)
    left = [c.weight for c in classify(rs, 1)]
    right = [c.weight for c in classify(rs, 6)]
    mirrored = [tuple(w[E6_MIRROR[j] - 1] for j in range(6)) for w in left]
    assert right == mirrored == [(3, 0, 1, 0, 0, 0)]
    assert is_ulrich(rs, 6, mirrored[0])


def test_rank_values_and_factorisations():
    r6 = rank(build("E", 6), 1, (0, 0, 0, 0, 1, 3))
    r7 = rank(build("E", 7), 1, (0, 0, 0, 0, 1, 3, 8))
    assert r6 == 4608 == 2**9 * 3**2
    assert r7 == 3700494720 == 2**7 * 3**4 * 5 * 13 * 17**2 * 19
    assert factor(r6) == {2: 9, 3: 2}
    assert factor(r7) == {2: 7, 3: 4, 5: 1, 13: 1, 17: 2, 19: 1}
    assert rank(build("A", 3), 2, (1, 0, 0)) == 2


@pytest.mark.parametrize("t", ALL_TYPES)
def test_rank_of_trivial_weight(t):
    rs = build(*t)
    for k in range(1, rs.rank + 1):
        assert rank(rs, k, (0,) * rs.rank) == 1


def test_rank_of_grassmannian_bundles():
    # Gr(2,5): Levi of type A1 x A2, so rank of a w1 + b w3 + c w4 is (a+1) dim V_{A2}(b, c)
    rs = build("A", 4)
    for a, b, c in itertools.product(range(4), repeat=3):
        assert rank(rs, 2, (a, 5, b, c)) == (a + 1) * (b + 1) * (c + 1) * (b + c + 2) // 2


@pytest.mark.parametrize("s,r,k", EXCEPTIONAL_CASES)
def test_derived_lemma_on_certificates(s, r, k):
    rs = build(s, r)
    d = dimension(rs, k)
    for c in classify(rs, k):
        vals = [f(c.weight) for f in sing_forms(rs, k)]
        assert all(v.denominator == 1 for v in vals)
        assert sorted(int(v) for v in vals) == list(range(1, d + 1))
        assert c.sing == tuple(range(1, d + 1)) and c.dim == d and c.rank >= 1


@pytest.mark.parametrize("t,k", [(("G", 2), 1), (("G", 2), 2), (("A", 3), 2), (("B", 3), 1), (("F", 4), 4)])
def test_search_matches_unpruned_box(t, k):
    rs = build(*t)
    assert [c.weight for c in classify(rs, k)] == classify_by_box(rs, k)


def test_small_classical_answers():
    assert classify_by_box(build("A", 3), 2) == [(0, 0, 1), (1, 0, 0)]
    assert [c.weight for c in classify(build("B", 3), 1)] == [(0, 0, 1)]
    assert [c.weight for c in classify(build("A", 4), 1)] == [(0, 0, 0, 0)]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_odd_quadrics_carry_only_the_spinor_bundle(n):
    rs = build("B", n)
    assert [c.weight for c in classify(rs, 1)] == [tuple(int(j == n - 1) for j in range(n))]


@pytest.mark.parametrize("t,k", [(("G", 2), 1), (("G", 2), 2), (("A", 3), 2), (("B", 3), 1), (("C", 3), 2), (("B", 4), 1)])
def test_box_contains_every_ulrich_weight(t, k):
    # scan a region well beyond the box; nothing outside it may be Ulrich
    rs = build(*t)
    box = SearchBox.for_variety(rs, k)
    ranges = [range(0, min(u + 6, 3 * u + 6) + 1) for u in box.upper]
    pts = np.array(list(itertools.product(*ranges)), dtype=np.int64)
    hits = pts[ulrich_many(rs, k, pts)]
    for w in hits:
        assert all(0 <= x <= u for x, u in zip(w, box.upper))
    assert sorted(tuple(int(x) for x in w) for w in hits) == classify_by_box(rs, k)


def test_box_bounds():
    box = SearchBox.for_variety(build("E", 6), 1)
    assert box.upper[0] == 15 and box.lower == (0,) * 6
    assert SearchBox.for_variety(build("G", 2), 1).upper == (4, 1)


def test_parallel_matches_sequential():
    for t, k in [(("E", 6), 1), (("E", 7), 1), (("F", 4), 2)]:
        rs = build(*t)
        assert classify(rs, k, jobs=2) == classify(rs, k, jobs=1)


def test_certificate_round_trip():
    c = classify(build("E", 6), 1)[0]
    data = json.loads(json.dumps(c.to_json()))
    assert UlrichCertificate.from_json(data) == c
    assert c.rank == 4608 and c.dim == 16 and c.index == 12


def test_certificate_invariant():
    c = certify(build("E", 6), 1, (0, 0, 0, 0, 1, 3))
    with pytest.raises(InvariantError):
        UlrichCertificate(c.type, c.k, c.weight, c.sing[:-1], c.rank, c.dim, c.index)
    with pytest.raises(InvariantError):
        certify(build("E", 6), 1, (0,) * 6)


@pytest.mark.parametrize("s,r,k", EXCEPTIONAL_CASES[:12])
def test_vectorised_criterion_matches_scalar(s, r, k):
    rs = build(s, r)
    rng = np.random.default_rng(r * 10 + k)
    w = rng.integers(0, 5, size=(300, r))
    w[:, k - 1] = rng.integers(-4, 5, size=300)
    for row, flag in zip(w, ulrich_many(rs, k, w)):
        row = tuple(int(x) for x in row)
        assert bool(flag) == is_ulrich(rs, k, row) == (sing_set(rs, k, row) == tuple(range(1, dimension(rs, k) + 1)))
