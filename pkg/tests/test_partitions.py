from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from spectrakron.errors import ValidationError
from spectrakron.partitions import (
    Partition,
    class_size,
    conjugate,
    cycle_type,
    enumerate_partitions,
    majorizes,
    normalize,
    sign,
    stretch,
)


def brute_force_partitions(k):
    """Partitions as sorted compositions: every composition is a 0/1 cut pattern."""
    if k == 0:
        return {()}
    found = set()
    for cuts in product((0, 1), repeat=max(k - 1, 0)):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        found.add(tuple(sorted(parts, reverse=True)))
    return found


def pentagonal_counts(n_max):
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > n:
                break
            s = 1 if j % 2 else -1
            total += s * p[n - g1]
            if g2 <= n:
                total += s * p[n - g2]
            j += 1
        p[n] = total
    return p


def test_partition_validation():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition((3, 1)).weight == 4
    with pytest.raises(ValidationError):
        Partition((1, 2))
    with pytest.raises(ValidationError):
        Partition((2, -1))


@pytest.mark.parametrize("text, expected", [("3,1", (3, 1)), ("", ()), ("(2, 2)", (2, 2)), ("0", ())])
def test_parse(text, expected):
    assert Partition.parse(text) == expected


@given(partitions())
def test_str_parse_round_trip(lam):
    assert Partition.parse(str(lam)) == lam


def test_enumerate_examples():
    assert enumerate_partitions(4, 2) == [(4,), (3, 1), (2, 2)]
    assert enumerate_partitions(0, 3) == [()]
    assert len(enumerate_partitions(5, 5)) == 7


@pytest.mark.parametrize("k", range(0, 13))
def test_enumerate_matches_brute_force(k):
    listed = enumerate_partitions(k)
    assert set(listed) == brute_force_partitions(k)
    assert len(listed) == len(set(listed))
    assert listed == sorted(listed, reverse=True)


def test_partition_counts_pentagonal():
    p = pentagonal_counts(30)
    for k in range(31):
        assert len(enumerate_partitions(k, k)) == p[k]


def test_enumerate_row_limit():
    for k in range(1, 10):
        for r in range(1, k + 1):
            assert enumerate_partitions(k, r) == [p for p in enumerate_partitions(k) if len(p) <= r]


@pytest.mark.parametrize(
    "nu, lam, expected",
    [((2, 2), (3, 1), True), ((3, 1), (2, 2), False), ((1, 1, 1, 1), (4,), True)],
)
def test_majorizes_examples(nu, lam, expected):
    assert majorizes(nu, lam) is expected


def test_majorizes_weight_mismatch():
    with pytest.raises(ValidationError, match="incomparable weights"):
        majorizes((2, 1), (2, 2))


@pytest.mark.parametrize("k", range(1, 9))
def test_majorization_is_partial_order(k):
    ps = enumerate_partitions(k)
    rel = {(a, b): majorizes(a, b) for a in ps for b in ps}
    for a in ps:
        assert rel[a, a]
    for a in ps:
        for b in ps:
            if rel[a, b] and rel[b, a]:
                assert a == b
            if rel[a, b]:
                for c in ps:
                    if rel[b, c]:
                        assert rel[a, c]


def test_normalize_examples():
    assert normalize((3, 1)) == (0.75, 0.25)
    assert normalize((7,)) == (1.0,)
    assert normalize((2, 1, 1)) == (0.5, 0.25, 0.25)
    with pytest.raises(ValidationError, match="normalization undefined"):
        normalize(())


@given(partitions(max_k=30))
def test_normalize_sums_to_one(lam):
    assert abs(sum(normalize(lam)) - 1) <= 1e-15


@given(partitions(max_k=12), st.integers(1, 9))
def test_normalize_stretch_invariant(lam, n):
    for a, b in zip(normalize(stretch(lam, n)), normalize(lam)):
        assert abs(a - b) <= 1e-15


def test_class_size_examples():
    assert class_size((2, 1, 1)) == 6
    assert class_size((1,) * 7) == 1
    for k in range(1, 10):
        assert class_size((k,)) == factorial(k - 1)


@pytest.mark.parametrize("k", range(1, 7))
def test_class_size_brute_force(k):
    counts = {}
    for pi in permutations(range(k)):
        ct = cycle_type(pi)
        counts[ct] = counts.get(ct, 0) + 1
    assert counts == {tau: class_size(tau) for tau in enumerate_partitions(k)}


def test_class_sizes_sum_to_factorial():
    for k in range(1, 13):
        assert sum(class_size(t) for t in enumerate_partitions(k)) == factorial(k)


def test_class_size_is_exact_beyond_64_bits():
    for k in (21, 22):
        total = sum(class_size(t) for t in enumerate_partitions(k))
        assert total == factorial(k) > 2**64


def test_sign():
    assert sign((1, 1, 1)) == 1
    assert sign((2, 1)) == -1
    assert sign((3,)) == 1


def test_stretch_examples():
    assert stretch((2, 1), 3) == (6, 3)
    assert stretch((4, 2, 1), 1) == (4, 2, 1)
    assert stretch((1, 1), 2) == (2, 2)
    with pytest.raises(ValidationError):
        stretch((1,), 0)


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate((2, 2)) == (2, 2)
    assert conjugate(()) == ()


@given(partitions(max_k=20))
def test_conjugate_involution_and_boxes(lam):
    assert conjugate(conjugate(lam)) == lam
    boxes = {(i, j) for i, p in enumerate(lam) for j in range(p)}
    conj = conjugate(lam)
    assert {(j, i) for i, p in enumerate(conj) for j in range(p)} == boxes
