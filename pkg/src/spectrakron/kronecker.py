"""Kronecker coefficients g(lam, mu, nu) from the character inner product.

    g = (1/k!) sum over classes tau of |tau| chi_lam(tau) chi_mu(tau) chi_nu(tau)

The class sum is formed in exact integers and must be divisible by k!; a
remainder means the character values are wrong and raises
``InternalConsistencyError``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

import numpy as np

from .characters import CharacterTable, character_table
from .dimensions import dim_u
from .errors import CapExceededError, InternalConsistencyError, ValidationError
from .information import shannon_entropy
from .partitions import Partition, _as_partition, enumerate_partitions, normalize, stretch

DEFAULT_CAP = 12


@dataclass(frozen=True)
class KroneckerTriple:
    lam: Partition
    mu: Partition
    nu: Partition
    g: int

    def to_record(self) -> dict:
        return {"lambda": str(self.lam), "mu": str(self.mu), "nu": str(self.nu), "g": str(self.g)}


def _table(k: int, cap: int) -> CharacterTable:
    if k > cap:
        raise CapExceededError(f"table too large: k={k} exceeds Kronecker cap {cap}")
    return character_table(k, cap=max(cap, k))


def class_sum(lam, mu, nu, cap: int = DEFAULT_CAP) -> int:
    """The undivided sum of class_size * chi_lam * chi_mu * chi_nu."""
    lam, mu, nu = (_as_partition(p) for p in (lam, mu, nu))
    k = lam.weight
    if not (k == mu.weight == nu.weight):
        raise ValidationError(f"incomparable weights: {lam.weight}, {mu.weight}, {nu.weight}")
    table = _table(k, cap)
    a, b, c = (table.values[table.row_index(p)] for p in (lam, mu, nu))
    return sum(z * x * y * w for z, x, y, w in zip(table.sizes, a, b, c))


def kron(lam, mu, nu, cap: int = DEFAULT_CAP) -> int:
    """Multiplicity of U_lam in U_mu (x) U_nu."""
    lam = _as_partition(lam)
    if lam.weight == 0:
        return 1 if not _as_partition(mu) and not _as_partition(nu) else 0
    raw = class_sum(lam, mu, nu, cap=cap)
    g, r = divmod(raw, factorial(lam.weight))
    if r or g < 0:
        raise InternalConsistencyError(
            f"class sum {raw} for ({lam}; {mu}; {nu}) is not a non-negative multiple of k!"
        )
    return g


def _row_filter(k: int, max_rows: int | None) -> list[int]:
    rows = enumerate_partitions(k)
    return [i for i, p in enumerate(rows) if max_rows is None or len(p) <= max_rows]


def kron_table(
    k: int,
    max_rows_each: tuple[int | None, int | None, int | None] = (None, None, None),
    cap: int = DEFAULT_CAP,
) -> list[KroneckerTriple]:
    """All triples with nonzero g under per-slot row limits.

    Ordered by lam, then mu, then nu, each in ``enumerate_partitions`` order.
    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    table = _table(k, cap)
    kf = factorial(k)
    chi = table.as_array()
    sizes = np.array(table.sizes, dtype=object)
    rows = table.rows
    lam_idx, mu_idx, nu_idx = (_row_filter(k, r) for r in max_rows_each)
    trivial = 0  # (k) is the first row
    found: dict[tuple[int, int, int], int] = {}
    for j in mu_idx:
        for l in nu_idx:
            if l == trivial:
                # tensoring with the trivial representation: g = [lam == mu]
                if j in lam_idx:
                    found[(j, j, l)] = 1
                continue
            if j == trivial:
                if l in lam_idx:
                    found[(l, j, l)] = 1
                continue
            weights = sizes * chi[j] * chi[l]
            raw = chi[lam_idx].dot(weights)
            for i, s in zip(lam_idx, raw):
                g, r = divmod(int(s), kf)
                if r or g < 0:
                    raise InternalConsistencyError(
                        f"class sum {s} for ({rows[i]}; {rows[j]}; {rows[l]}) not divisible by {k}!"
                    )
                if g:
                    found[(i, j, l)] = g
    return [
        KroneckerTriple(rows[i], rows[j], rows[l], g) for (i, j, l), g in sorted(found.items())
    ]


def cg_dimension_check(mu, nu, cap: int = DEFAULT_CAP) -> bool:
    """dim U_mu * dim U_nu == sum_lam g(lam, mu, nu) dim U_lam, exactly."""
    mu, nu = _as_partition(mu), _as_partition(nu)
    if mu.weight != nu.weight:
        raise ValidationError(f"incomparable weights: {mu.weight} vs {nu.weight}")
    k = mu.weight
    rhs = sum(kron(lam, mu, nu, cap=cap) * dim_u(lam) for lam in enumerate_partitions(k))
    return dim_u(mu) * dim_u(nu) == rhs


@dataclass(frozen=True)
class StretchReport:
    lam: Partition
    mu: Partition
    nu: Partition
    values: dict[int, int] = field(default_factory=dict)

    @property
    def all_nonzero(self) -> bool:
        return all(v != 0 for v in self.values.values())


def stretch_nonvanishing_check(lam, mu, nu, n_max: int, cap: int = DEFAULT_CAP) -> StretchReport:
    """g(N lam, N mu, N nu) for N = 1..n_max, starting from a nonzero triple."""
    lam, mu, nu = (_as_partition(p) for p in (lam, mu, nu))
    if kron(lam, mu, nu, cap=cap) == 0:
        raise ValidationError(f"g({lam}; {mu}; {nu}) is zero; nothing to stretch")
    if n_max * lam.weight > cap:
        raise CapExceededError(f"stretched degree {n_max * lam.weight} exceeds cap {cap}")
    values = {
        n: kron(stretch(lam, n), stretch(mu, n), stretch(nu, n), cap=cap)
        for n in range(1, n_max + 1)
    }
    return StretchReport(lam, mu, nu, values)


@dataclass(frozen=True)
class EntropyTripleReport:
    lam: Partition
    mu: Partition
    nu: Partition
    g: int
    entropies: tuple[float, float, float]
    slacks: tuple[float, float, float]
    """H(b) + H(c) - H(a) for each cyclic rotation (a, b, c) of the triple."""

    @property
    def passed(self) -> bool:
        return self.g == 0 or all(s >= -1e-12 for s in self.slacks)


def entropy_triple_check(lam, mu, nu, cap: int = DEFAULT_CAP) -> EntropyTripleReport:
    """When g != 0, H(lam_bar) <= H(mu_bar) + H(nu_bar) in every cyclic rotation."""
    lam, mu, nu = (_as_partition(p) for p in (lam, mu, nu))
    g = kron(lam, mu, nu, cap=cap)
    h = tuple(shannon_entropy(normalize(p)) for p in (lam, mu, nu))
    slacks = tuple(h[(i + 1) % 3] + h[(i + 2) % 3] - h[i] for i in range(3))
    return EntropyTripleReport(lam, mu, nu, g, h, slacks)


def symmetric_orbit(lam, mu, nu) -> set[tuple[Partition, Partition, Partition]]:
    """The (up to 6) argument orders of a triple."""
    return {tuple(p) for p in permutations((_as_partition(lam), _as_partition(mu), _as_partition(nu)))}
