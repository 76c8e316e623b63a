import math
from itertools import combinations_with_replacement, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import partitions
from spectrakron.dimensions import dim_u
from spectrakron.partitions import enumerate_partitions
from spectrakron.symfunc import (
    content_expansion_check,
    frobenius_check,
    homog,
    power_sum,
    power_sum_product,
    product_point,
    schur,
    schur_branching,
)


def homog_by_monomials(r, x):
    return sum(math.prod(c) for c in combinations_with_replacement(x, r)) if r else 1.0


def schur_by_tableaux(lam, x):
    """Sum of x^T over semistandard tableaux T of shape lam with entries < len(x)."""
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
    total = 0.0
    for vals in product(range(len(x)), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[i, j] <= t[i, j + 1] for (i, j) in cells if (i, j + 1) in t) and all(
            t[i, j] < t[i + 1, j] for (i, j) in cells if (i + 1, j) in t
        ):
            total += math.prod(x[v] for v in vals)
    return total


points = st.lists(st.floats(0, 2, allow_nan=False), min_size=1, max_size=4)


def test_power_sum_examples():
    assert power_sum(2, (1, 1)) == 2
    assert power_sum(1, (0.2, 0.3, 0.5)) == pytest.approx(1.0, abs=1e-15)
    assert power_sum(3, (0.5, 0.5)) == 0.25
    assert power_sum_product((2, 1), (1, 2)) == 15


def test_homog_examples():
    assert homog(2, (0.5, 0.5)) == 0.75
    assert homog(0, (0.3, 0.9)) == 1
    assert homog(1, (0.3, 0.9)) == pytest.approx(1.2)
    assert homog(-1, (0.3,)) == 0


@given(st.integers(0, 6), points)
def test_homog_matches_monomial_sum(r, x):
    assert homog(r, x) == pytest.approx(homog_by_monomials(r, x), rel=1e-12, abs=1e-12)


def test_schur_examples():
    assert schur((1, 1), (0.5, 0.5)) == pytest.approx(0.25, abs=1e-15)
    x = (0.3, 0.2, 0.5)
    assert schur((4,), x) == pytest.approx(homog(4, x), abs=1e-15)
    assert schur((1, 1, 1), (0.5, 0.5)) == 0


@pytest.mark.parametrize("k", range(1, 6))
def test_schur_matches_tableau_sum(k, rng):
    for lam in enumerate_partitions(k):
        for d in (1, 2, 3):
            x = rng.uniform(0, 1, size=d)
            expected = schur_by_tableaux(lam, x)
            assert schur(lam, x) == pytest.approx(expected, rel=1e-10, abs=1e-12)
            assert schur_branching(lam, x) == pytest.approx(expected, rel=1e-12, abs=1e-14)


def test_branching_stays_accurate_for_long_frames():
    # s_(a,b)(x1,x2) = (x1 x2)^b (x1^(a-b+1) - x2^(a-b+1)) / (x1 - x2)
    x1, x2 = 0.7, 0.3
    for a, b in [(140, 60), (100, 100), (199, 1)]:
        closed = (x1 * x2) ** b * (x1 ** (a - b + 1) - x2 ** (a - b + 1)) / (x1 - x2)
        assert schur_branching((a, b), (x1, x2)) == pytest.approx(closed, rel=1e-12)


@given(partitions(max_k=6), st.integers(0, 10**6))
@settings(max_examples=50)
def test_schur_symmetric(lam, seed):
    rng = np.random.default_rng(seed)
    x = rng.uniform(0, 1, size=4)
    assert schur(lam, x) == pytest.approx(schur(lam, rng.permutation(x)), abs=1e-12)


@given(partitions(max_k=6), st.integers(0, 10**6))
@settings(max_examples=50)
def test_schur_stable_under_appended_zero(lam, seed):
    x = np.random.default_rng(seed).uniform(0, 1, size=3)
    assert schur(lam, np.append(x, 0.0)) == pytest.approx(schur(lam, x), abs=1e-12)


@pytest.mark.parametrize("k", range(1, 7))
def test_power_sums_multiplicative(k, rng):
    for tau in enumerate_partitions(k):
        x, y = rng.uniform(0, 1, 2), rng.uniform(0, 1, 3)
        lhs = power_sum_product(tau, x) * power_sum_product(tau, y)
        assert lhs == pytest.approx(power_sum_product(tau, product_point(x, y)), abs=1e-10)


@pytest.mark.parametrize("k", range(1, 11))
def test_frame_distribution_normalized(k, rng):
    r = rng.dirichlet(np.ones(3))
    total = sum(dim_u(lam) * schur(lam, r) for lam in enumerate_partitions(k))
    assert total == pytest.approx(1.0, abs=1e-9)


def test_frobenius_examples():
    assert frobenius_check((2,), (1, 1)) <= 1e-12
    assert frobenius_check((1,), (0.3, 1.7, 0.2)) <= 1e-12
    assert frobenius_check((3,), (0.5, 0.5)) <= 1e-12


@pytest.mark.parametrize("k", range(1, 8))
def test_frobenius_all_classes(k, rng):
    for tau in enumerate_partitions(k):
        x = rng.uniform(0, 2, size=3)
        assert frobenius_check(tau, x) <= 1e-9


def test_product_point_examples():
    assert list(product_point((1, 1), (1, 1))) == [1, 1, 1, 1]
    assert list(product_point((0.5, 0.5), (0.5, 0.5))) == [0.25] * 4
    assert list(product_point((3,), (2,))) == [6]
    assert list(product_point((1, 2), (1, 3))) == [6, 3, 2, 1]


def test_content_expansion_examples(rng):
    assert content_expansion_check((2,), (1,), (1,)) <= 1e-15
    assert content_expansion_check((1, 1), (0.5, 0.5), (0.5, 0.5)) <= 1e-12
    x, y = rng.uniform(0, 1, 2), rng.uniform(0, 1, 2)
    assert content_expansion_check((2, 1), x, y) <= 1e-10


def test_content_expansion_unequal_factors(rng):
    for lam in enumerate_partitions(4):
        x, y = rng.uniform(0, 1, 2), rng.uniform(0, 1, 3)
        assert content_expansion_check(lam, x, y) <= 1e-10
