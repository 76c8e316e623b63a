"""Integer partitions, cycle types and majorization.

Partitions are stored as weakly decreasing tuples of positive integers with
no trailing zeros, so a ``Partition`` compares and hashes like the plain
tuple of its parts.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import accumulate, zip_longest
from math import factorial, prod
from typing import Iterable

from .errors import ValidationError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers (a Young frame)."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValidationError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def rows(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated form produced by ``str`` ("3,1").

        An empty string (or "0") is the empty partition.
        """
        text = text.strip().strip("()")
        if not text:
            return cls()
        try:
            parts = [int(p) for p in text.split(",") if p.strip()]
        except ValueError:
            raise ValidationError(f"malformed partition string: {text!r}") from None
        return cls(parts)


# A cycle type is a partition read as the cycle lengths of a permutation.
CycleType = Partition


def _as_partition(obj) -> Partition:
    return obj if isinstance(obj, Partition) else Partition(obj)


@lru_cache(maxsize=None)
def _partitions(k: int, max_part: int, max_rows: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    if max_rows == 0:
        return ()
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in _partitions(k - first, first, max_rows - 1):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(k: int, max_rows: int | None = None) -> list[Partition]:
    """All partitions of ``k`` with at most ``max_rows`` parts.

    Output is in decreasing lexicographic order, e.g. ``(4), (3,1), (2,2)``
    for ``k=4, max_rows=2``.
    """
    if k < 0:
        raise ValidationError(f"k must be non-negative, got {k}")
    if max_rows is None:
        max_rows = k
    if max_rows < 1 and k > 0:
        raise ValidationError(f"max_rows must be >= 1, got {max_rows}")
    return [Partition(p) for p in _partitions(k, k, min(max_rows, k))]


def prefix_sums(parts: Iterable[int], length: int) -> list[int]:
    padded = list(parts) + [0] * length
    return list(accumulate(padded[:length]))


def majorizes(nu, lam) -> bool:
    """True iff ``nu`` is majorized by ``lam`` (every prefix sum of nu <= lam's)."""
    nu, lam = _as_partition(nu), _as_partition(lam)
    if nu.weight != lam.weight:
        raise ValidationError(f"incomparable weights: {nu.weight} vs {lam.weight}")
    n = max(len(nu), len(lam))
    return all(a <= b for a, b in zip(prefix_sums(nu, n), prefix_sums(lam, n)))


def normalize(lam) -> tuple[float, ...]:
    """Row lengths divided by the weight, a probability vector."""
    lam = _as_partition(lam)
    k = lam.weight
    if k == 0:
        raise ValidationError("normalization undefined for the empty partition")
    return tuple(p / k for p in lam)


def l1_distance(p: Iterable[float], q: Iterable[float]) -> float:
    """Sum of absolute differences, shorter vector padded with zeros."""
    return sum(abs(a - b) for a, b in zip_longest(p, q, fillvalue=0.0))


def class_size(tau) -> int:
    """Number of permutations of cycle type ``tau`` in S_k."""
    tau = _as_partition(tau)
    mult = Counter(tau)
    return factorial(tau.weight) // prod(j**m * factorial(m) for j, m in mult.items())


def sign(tau) -> int:
    """Sign of any permutation with cycle type ``tau``."""
    tau = _as_partition(tau)
    return -1 if (tau.weight - len(tau)) % 2 else 1


def stretch(lam, N: int) -> Partition:
    if N <= 0:
        raise ValidationError(f"stretch factor must be positive, got {N}")
    return Partition(N * p for p in _as_partition(lam))


def conjugate(lam) -> Partition:
    """Transpose of the Young frame."""
    lam = _as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def cycle_type(perm: Iterable[int]) -> Partition:
    """Cycle type of a permutation given as a tuple of 0-based images."""
    perm = tuple(perm)
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        lengths.append(n)
    return Partition(sorted(lengths, reverse=True))
