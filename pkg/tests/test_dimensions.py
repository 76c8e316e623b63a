import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

import pytest
from hypothesis import given

from conftest import partitions
from spectrakron.dimensions import bounds, dim_u, dim_v, hook_lengths
from spectrakron.information import shannon_entropy
from spectrakron.partitions import Partition, conjugate, enumerate_partitions, normalize, stretch


@lru_cache(maxsize=None)
def count_syt(lam):
    """Standard tableaux counted by removing the box holding k (a corner)."""
    if sum(lam) == 0:
        return 1
    total = 0
    for i, p in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if p > below:
            child = list(lam)
            child[i] -= 1
            total += count_syt(tuple(c for c in child if c))
    return total


def count_syt_by_filling(lam):
    k = sum(lam)
    count = 0
    for perm in permutations(range(1, k + 1)):
        rows, start = [], 0
        for p in lam:
            rows.append(perm[start:start + p])
            start += p
        ok = all(r[j] < r[j + 1] for r in rows for j in range(len(r) - 1))
        ok = ok and all(
            rows[i][j] < rows[i + 1][j] for i in range(len(rows) - 1) for j in range(len(rows[i + 1]))
        )
        count += ok
    return count


def count_ssyt(lam, d):
    """Semistandard fillings with entries in 1..d, by brute force."""
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
    count = 0
    for vals in product(range(1, d + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[i, j] <= t[i, j + 1] for (i, j) in cells if (i, j + 1) in t) and all(
            t[i, j] < t[i + 1, j] for (i, j) in cells if (i + 1, j) in t
        ):
            count += 1
    return count


def test_dim_u_examples():
    assert hook_lengths((2, 1)) == [3, 1, 1]
    assert dim_u((2, 1)) == 2
    assert dim_u((6,)) == 1
    assert dim_u((2, 2)) == 2


def test_dim_v_examples():
    assert dim_v((2, 1), 2) == 2
    assert dim_v((1, 1, 1), 2) == 0
    assert dim_v((3,), 2) == 4


@pytest.mark.parametrize("k", range(1, 10))
def test_dim_u_counts_standard_tableaux(k):
    for lam in enumerate_partitions(k):
        assert dim_u(lam) == count_syt(tuple(lam))


@pytest.mark.parametrize("k", range(1, 6))
def test_dim_u_by_explicit_fillings(k):
    for lam in enumerate_partitions(k):
        assert dim_u(lam) == count_syt_by_filling(lam)


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("k", range(1, 6))
def test_dim_v_counts_semistandard_tableaux(k, d):
    for lam in enumerate_partitions(k):
        assert dim_v(lam, d) == count_ssyt(lam, d)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_schur_weyl_completeness(d):
    for k in range(1, 11):
        total = sum(dim_u(lam) * dim_v(lam, d) for lam in enumerate_partitions(k, d))
        assert total == d**k


@pytest.mark.parametrize("k", range(1, 13))
def test_dim_u_conjugate_invariant(k):
    for lam in enumerate_partitions(k):
        assert dim_u(lam) == dim_u(conjugate(lam))


def test_bounds_examples():
    r = bounds((2, 1), 2)
    assert r.v_upper == 4 and r.dim_v == 2
    r = bounds((5,), 1)
    assert (r.dim_u, r.dim_v, r.v_upper, r.u_lower, r.u_upper) == (1, 1, 1, 1, 1)
    r = bounds((2, 2), 2)
    assert r.u_upper == 6 and r.dim_u == 2
    assert isinstance(r.u_upper, Fraction)


def test_bounds_sandwich_exhaustive():
    for k in range(1, 13):
        for d in range(1, 5):
            for lam in enumerate_partitions(k):
                r = bounds(lam, d)
                assert r.dim_u <= r.u_upper
                assert r.dim_v <= r.v_upper
                if len(lam) <= d:
                    assert r.u_lower <= r.dim_u
                else:
                    assert r.u_lower is None and r.dim_v == 0


@given(partitions(max_k=14))
def test_dim_u_positive_and_dim_v_vanishing(lam):
    assert dim_u(lam) >= 1
    for d in range(1, 6):
        assert (dim_v(lam, d) == 0) == (len(lam) > d)


def test_entropy_asymptotics_monotone():
    base = Partition((2, 1))
    h = shannon_entropy(normalize(base))
    gaps = []
    for n in (1, 2, 4, 8):
        lam = stretch(base, n)
        gaps.append(abs(math.log(dim_u(lam)) / (n * base.weight) - h))
    for a, b in zip(gaps, gaps[1:]):
        assert b <= a + 1e-9
