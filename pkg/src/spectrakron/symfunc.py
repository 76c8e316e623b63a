"""Floating-point evaluation of power sums, complete homogeneous sums and
Schur functions, plus residual checks of the character expansions that tie
them to the symmetric group.
"""
from __future__ import annotations

from functools import lru_cache
from math import prod

import numpy as np

from .characters import character_table
from .kronecker import DEFAULT_CAP as KRON_CAP, kron
from .partitions import _as_partition, enumerate_partitions


def _point(x) -> np.ndarray:
    return np.asarray(x, dtype=float).ravel()


def power_sum(r: int, x) -> float:
    """p_r(x) = sum_i x_i**r."""
    if r < 1:
        raise ValueError(f"power sum degree must be >= 1, got {r}")
    return float(np.sum(_point(x) ** r))


def power_sum_product(tau, x) -> float:
    """p_tau(x), the product of p_r over the parts of tau."""
    x = _point(x)
    return prod(power_sum(r, x) for r in _as_partition(tau))


def homog_table(r: int, x) -> np.ndarray:
    """h_0(x), ..., h_r(x) by the recursion over variables."""
    h = np.zeros(max(r, 0) + 1)
    h[0] = 1.0
    for xi in _point(x):
        for deg in range(1, r + 1):
            h[deg] += xi * h[deg - 1]
    return h


def homog(r: int, x) -> float:
    """Complete homogeneous symmetric sum h_r; 1 for r = 0 and 0 for r < 0."""
    if r < 0:
        return 0.0
    return float(homog_table(r, x)[r])


def schur(lam, x) -> float:
    """s_lam(x) from the Jacobi-Trudi determinant det(h_{lam_i - i + j})."""
    lam = _as_partition(lam)
    x = _point(x)
    n = len(lam)
    if n == 0:
        return 1.0
    if n > len(x):
        return 0.0
    h = homog_table(lam[0] + n - 1, x)

    def h_at(i: int) -> float:
        return h[i] if i >= 0 else 0.0

    mat = np.array([[h_at(lam[i] - i + j) for j in range(n)] for i in range(n)])
    return float(np.linalg.det(mat))


def schur_branching(lam, x) -> float:
    """s_lam(x) as a sum of positive terms via the branching rule.

    s_lam(x_1..x_d) = sum over mu interlacing lam of s_mu(x_1..x_{d-1}) x_d^{|lam|-|mu|}.
    No cancellation occurs for non-negative x, so this stays accurate where
    the determinant loses all precision (large, long frames).
    """
    return _branch(tuple(_as_partition(lam)), tuple(float(v) for v in _point(x)))


@lru_cache(maxsize=65536)
def _branch(lam: tuple[int, ...], x: tuple[float, ...]) -> float:
    if not lam:
        return 1.0
    if len(lam) > len(x):
        return 0.0
    if len(x) == 1:
        return x[0] ** lam[0]
    last, rest = x[-1], x[:-1]
    total = 0.0
    weight = sum(lam)
    for mu in _interlacing(lam, len(rest)):
        total += _branch(mu, rest) * last ** (weight - sum(mu))
    return total


def _interlacing(lam: tuple[int, ...], max_rows: int):
    # mu with lam_{i+1} <= mu_i <= lam_i
    bounds = [(lam[i + 1] if i + 1 < len(lam) else 0, lam[i]) for i in range(min(len(lam), max_rows))]

    def rec(i, prefix):
        if i == len(bounds):
            parts = list(prefix)
            while parts and parts[-1] == 0:
                parts.pop()
            yield tuple(parts)
            return
        lo, hi = bounds[i]
        for v in range(lo, hi + 1):
            yield from rec(i + 1, prefix + (v,))

    yield from rec(0, ())


def frobenius_check(tau, x) -> float:
    """|p_tau(x) - sum_lam chi_lam(tau) s_lam(x)|."""
    tau = _as_partition(tau)
    table = character_table(tau.weight)
    col = table.column_index(tau)
    rhs = sum(row[col] * schur(lam, x) for lam, row in zip(table.rows, table.values))
    return abs(power_sum_product(tau, x) - rhs)


def product_point(x, y) -> np.ndarray:
    """All pairwise products x_i y_j, sorted non-increasing."""
    z = np.outer(_point(x), _point(y)).ravel()
    return np.sort(z)[::-1]


def content_expansion_check(lam, x, y, cap: int = KRON_CAP) -> float:
    """Residual of s_lam(xy) against sum_{mu,nu} g(lam,mu,nu) s_mu(x) s_nu(y).

    mu ranges over frames with at most len(x) rows, nu over at most len(y).
    """
    lam = _as_partition(lam)
    x, y = _point(x), _point(y)
    k = lam.weight
    lhs = schur(lam, product_point(x, y))
    if k == 0:
        return abs(lhs - 1.0)
    rhs = 0.0
    for mu in enumerate_partitions(k, len(x)):
        s_mu = schur(mu, x)
        for nu in enumerate_partitions(k, len(y)):
            g = kron(lam, mu, nu, cap=cap)
            if g:
                rhs += g * s_mu * schur(nu, y)
    return abs(lhs - rhs)

