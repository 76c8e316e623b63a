"""Brute-force operators on the tensor power (C^d)^{(x)k}.

Everything here is dense linear algebra on d**k dimensional matrices and is
meant only for tiny k and d, where it gives an independent check on the
character, dimension and Schur function machinery.

Permutations are tuples of 0-based images: ``pi[p]`` is where position p
goes. The operator of ``pi`` moves the tensor factor in slot p to slot
pi[p], so ``perm_operator(pi) @ perm_operator(sigma) == perm_operator(compose(pi, sigma))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import permutations, product
from math import factorial

import numpy as np

from .characters import character
from .dimensions import dim_u
from .errors import CapExceededError, InternalConsistencyError, ValidationError
from .partitions import Partition, _as_partition, cycle_type

DEFAULT_CAP = 4096
MAX_DEGREE = 6


def _check_cap(d: int, k: int, cap: int) -> None:
    if d**k > cap:
        raise CapExceededError(f"tensor dimension {d}**{k} = {d**k} exceeds cap {cap}")


def compose(pi, sigma) -> tuple[int, ...]:
    """(pi sigma)(x) = pi(sigma(x))."""
    return tuple(pi[s] for s in sigma)


def inverse(pi) -> tuple[int, ...]:
    inv = [0] * len(pi)
    for p, q in enumerate(pi):
        inv[q] = p
    return tuple(inv)


def perm_sign(pi) -> int:
    ct = cycle_type(pi)
    return -1 if (ct.weight - len(ct)) % 2 else 1


def _target_index(pi, d: int) -> np.ndarray:
    k = len(pi)
    digits = np.unravel_index(np.arange(d**k), (d,) * k)
    moved = [None] * k
    for p in range(k):
        moved[pi[p]] = digits[p]
    return np.ravel_multi_index(moved, (d,) * k)


def perm_operator(pi, d: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """0/1 matrix of the permutation acting on tensor factors."""
    pi = tuple(pi)
    k = len(pi)
    _check_cap(d, k, cap)
    dim = d**k
    out = np.zeros((dim, dim))
    out[_target_index(pi, d), np.arange(dim)] = 1.0
    return out


def tensor_power(mat: np.ndarray, k: int) -> np.ndarray:
    """mat (x) mat (x) ... (k factors)."""
    return reduce(np.kron, [np.asarray(mat)] * k, np.ones((1, 1)))


def _accumulate(terms: dict[tuple[int, ...], float], d: int, k: int) -> np.ndarray:
    dim = d**k
    out = np.zeros((dim, dim))
    cols = np.arange(dim)
    for pi, coef in terms.items():
        if coef:
            out[_target_index(pi, d), cols] += coef
    return out


@dataclass(frozen=True)
class Tableau:
    """A standard filling of a frame with 1..k, given row by row."""

    frame: Partition
    filling: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "frame", _as_partition(self.frame))
        object.__setattr__(self, "filling", tuple(tuple(int(v) for v in r) for r in self.filling))
        shape = tuple(len(r) for r in self.filling)
        if Partition(shape) != self.frame:
            raise ValidationError(f"filling shape {shape} does not match frame {self.frame}")
        k = self.frame.weight
        if sorted(v for row in self.filling for v in row) != list(range(1, k + 1)):
            raise ValidationError("filling must use each of 1..k exactly once")
        for row in self.filling:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValidationError(f"non-standard tableau: row {row} not increasing")
        for upper, lower in zip(self.filling, self.filling[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ValidationError("non-standard tableau: column not increasing")

    @classmethod
    def row_reading(cls, frame) -> "Tableau":
        """Fill boxes row by row, left to right."""
        frame = _as_partition(frame)
        rows, start = [], 1
        for p in frame:
            rows.append(tuple(range(start, start + p)))
            start += p
        return cls(frame, tuple(rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [
            tuple(row[j] for row in self.filling if len(row) > j)
            for j in range(self.frame[0] if self.frame else 0)
        ]


def _block_group(blocks, k: int):
    """All permutations of 0..k-1 that preserve each block (1-based entries)."""
    blocks = [tuple(v - 1 for v in b) for b in blocks if len(b) > 1]
    for choice in product(*(permutations(b) for b in blocks)):
        pi = list(range(k))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                pi[src] = dst
        yield tuple(pi)


def symmetrizer_element(tab: Tableau) -> dict[tuple[int, ...], int]:
    """e(T) in the group algebra: (sum sgn(c) c)(sum r), as {perm: coefficient}."""
    k = tab.frame.weight
    rows = list(_block_group(tab.filling, k))
    cols = list(_block_group(tab.columns(), k))
    elem: dict[tuple[int, ...], int] = {}
    for c in cols:
        s = perm_sign(c)
        for r in rows:
            g = compose(c, r)
            elem[g] = elem.get(g, 0) + s
    return elem


def algebra_product(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for g, x in a.items():
        for h, y in b.items():
            gh = compose(g, h)
            out[gh] = out.get(gh, 0) + x * y
    return {g: v for g, v in out.items() if v}


@dataclass(frozen=True)
class Symmetrizer:
    tableau: Tableau
    operator: np.ndarray
    r: int
    """Scale with e(T)^2 = r e(T), measured from the identity coefficient of e(T)^2."""

    @property
    def projector(self) -> np.ndarray:
        return self.operator / self.r


def young_symmetrizer(tab: Tableau, d: int, cap: int = DEFAULT_CAP) -> Symmetrizer:
    """The Young symmetry operator of ``tab`` on (C^d)^{(x)k}.

    The integer r is read off the identity coefficient of e(T)^2 in the group
    algebra (e(T) has identity coefficient 1); e(T)^2 == r e(T) is then
    verified on the tensor space.
    """
    if not isinstance(tab, Tableau):
        raise ValidationError("young_symmetrizer needs a Tableau")
    k = tab.frame.weight
    if k > MAX_DEGREE:
        raise CapExceededError(f"degree {k} exceeds oracle limit {MAX_DEGREE}")
    _check_cap(d, k, cap)
    elem = symmetrizer_element(tab)
    r = sum(x * elem.get(inverse(g), 0) for g, x in elem.items())
    if r <= 0:
        raise InternalConsistencyError(f"symmetrizer scale {r} is not positive")
    op = _accumulate(elem, d, k)
    if not np.allclose(op @ op, r * op, atol=1e-8):
        raise InternalConsistencyError("e(T)^2 != r e(T) on the tensor space")
    return Symmetrizer(tab, op, r)


def central_projector(lam, d: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Isotypic projector (dim U_lam / k!) sum_pi chi_lam(pi) pi onto U_lam (x) V_lam."""
    lam = _as_partition(lam)
    k = lam.weight
    if k > MAX_DEGREE:
        raise CapExceededError(f"degree {k} exceeds oracle limit {MAX_DEGREE}")
    _check_cap(d, k, cap)
    scale = dim_u(lam) / factorial(k)
    chi_cache: dict[Partition, int] = {}
    terms = {}
    for pi in permutations(range(k)):
        ct = cycle_type(pi)
        if ct not in chi_cache:
            chi_cache[ct] = character(lam, ct)
        terms[pi] = scale * chi_cache[ct]
    return _accumulate(terms, d, k)


def numerical_rank(mat: np.ndarray, rtol: float = 1e-8) -> int:
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv.size == 0 or sv[0] < 1e-12:
        return 0
    return int(np.sum(sv > rtol * sv[0]))


def exact_trace(rho, lam, cap: int = DEFAULT_CAP) -> float:
    """tr(P_lam rho^{(x)k}) by explicit matrices."""
    mat = np.asarray(getattr(rho, "matrix", rho))
    lam = _as_partition(lam)
    d = mat.shape[0]
    proj = central_projector(lam, d, cap=cap)
    big = tensor_power(mat, lam.weight)
    return float(np.real(np.sum(proj * big.T)))


def reorder_index(m: int, n: int, k: int) -> np.ndarray:
    """For each composite basis index, the matching index in A-factors-then-B-factors order.

    A composite local index is a*n + b with a in [0, m), b in [0, n).
    """
    digits = np.unravel_index(np.arange((m * n) ** k), (m * n,) * k)
    a_digits = [c // n for c in digits]
    b_digits = [c % n for c in digits]
    a_idx = np.ravel_multi_index(a_digits, (m,) * k) if k else np.zeros(1, dtype=int)
    b_idx = np.ravel_multi_index(b_digits, (n,) * k) if k else np.zeros(1, dtype=int)
    return a_idx * n**k + b_idx


def reorder_operator(op: np.ndarray, m: int, n: int, k: int, inverse: bool = False) -> np.ndarray:
    """Move an operator between (A^k)(x)(B^k) ordering and (AB)^k ordering."""
    idx = reorder_index(m, n, k)
    if not inverse:
        return op[np.ix_(idx, idx)]
    out = np.empty_like(op)
    out[np.ix_(idx, idx)] = op
    return out


def overlap_check(lam, m: int, n: int, mu, nu, cap: int = DEFAULT_CAP, atol: float = 1e-10) -> bool:
    """Whether (P^A_mu (x) P^B_nu) P^AB_lam is nonzero (operator norm > atol)."""
    lam, mu, nu = (_as_partition(p) for p in (lam, mu, nu))
    k = lam.weight
    if not (k == mu.weight == nu.weight):
        raise ValidationError(f"incomparable weights: {lam.weight}, {mu.weight}, {nu.weight}")
    _check_cap(m * n, k, cap)
    p_ab = central_projector(lam, m * n, cap=cap)
    local = np.kron(central_projector(mu, m, cap=cap), central_projector(nu, n, cap=cap))
    prod_op = reorder_operator(local, m, n, k) @ p_ab
    return bool(np.linalg.norm(prod_op, 2) > atol)
