"""Density operators, their marginals and spectra, Young-frame outcome
distributions of rho^{(x)k}, and the search for partition triples with
nonvanishing Kronecker coefficient that approximate the spectra of a
bipartite state and its two marginals.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .dimensions import dim_u
from .eigen import jacobi_eigenvalues
from .errors import ValidationError
from .information import kl_divergence, shannon_entropy
from .kronecker import kron
from .partitions import Partition, enumerate_partitions, l1_distance, normalize
from .symfunc import schur_branching

ATOL = 1e-10
COMPAT_KRON_CAP = 20


class DensityMatrixError(ValidationError):
    pass


class DensityMatrix:
    """A validated Hermitian, positive semidefinite, unit-trace matrix.

    ``bipartition`` is an optional (m, n) with m * n == dim; the composite
    basis index is a * n + b.
    """

    def __init__(self, matrix, bipartition: tuple[int, int] | None = None, atol: float = ATOL):
        mat = np.array(matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] == 0:
            raise DensityMatrixError(f"square matrix required: got shape {mat.shape}")
        herm = float(np.max(np.abs(mat - mat.conj().T)))
        if herm > atol:
            raise DensityMatrixError(f"Hermiticity violated: residual {herm:.3e}")
        tr = abs(np.trace(mat) - 1.0)
        if tr > atol:
            raise DensityMatrixError(f"unit trace violated: residual {tr:.3e}")
        if bipartition is not None:
            m, n = (int(v) for v in bipartition)
            if m < 1 or n < 1 or m * n != mat.shape[0]:
                raise DensityMatrixError(
                    f"bipartition {m}x{n} does not factor dimension {mat.shape[0]}"
                )
            bipartition = (m, n)
        mat.setflags(write=False)
        self.matrix = mat
        self.bipartition = bipartition
        self._spectrum: tuple[float, ...] | None = None
        self.spectrum()  # checks positivity

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim}, bipartition={self.bipartition})"

    def spectrum(self) -> tuple[float, ...]:
        if self._spectrum is None:
            self._spectrum = spectrum(self.matrix)
        return self._spectrum

    @classmethod
    def pure(cls, vec, bipartition=None) -> "DensityMatrix":
        v = np.asarray(vec, dtype=complex).ravel()
        v = v / np.linalg.norm(v)
        return cls(np.outer(v, v.conj()), bipartition)

    @classmethod
    def maximally_mixed(cls, dim: int, bipartition=None) -> "DensityMatrix":
        return cls(np.eye(dim) / dim, bipartition)

    @classmethod
    def diagonal(cls, probs: Sequence[float], bipartition=None) -> "DensityMatrix":
        return cls(np.diag(np.asarray(probs, dtype=float)), bipartition)

    def tensor(self, other: "DensityMatrix") -> "DensityMatrix":
        return DensityMatrix(np.kron(self.matrix, other.matrix), (self.dim, other.dim))

    def to_dict(self) -> dict:
        out = {
            "dim": self.dim,
            "real": self.matrix.real.ravel().tolist(),
            "imag": self.matrix.imag.ravel().tolist(),
        }
        if self.bipartition:
            out["m"], out["n"] = self.bipartition
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "DensityMatrix":
        try:
            dim = int(data["dim"])
            real = np.asarray(data["real"], dtype=float).ravel()
            imag = np.asarray(data.get("imag", np.zeros(dim * dim)), dtype=float).ravel()
        except (KeyError, TypeError, ValueError) as exc:
            raise DensityMatrixError(f"malformed density matrix record: {exc}") from exc
        if real.size != dim * dim or imag.size != dim * dim:
            raise DensityMatrixError(
                f"entry arrays must have dim*dim = {dim * dim} entries, got {real.size} and {imag.size}"
            )
        bip = None
        if "m" in data or "n" in data:
            bip = (int(data["m"]), int(data["n"]))
        return cls((real + 1j * imag).reshape(dim, dim), bip)

    @classmethod
    def load(cls, path) -> "DensityMatrix":
        """Read the JSON document written by ``dump``."""
        path = Path(path)
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise DensityMatrixError(f"{path}: not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def dump(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=1) + "\n")


def bell_state() -> DensityMatrix:
    return DensityMatrix.pure(np.array([1, 0, 0, 1]) / math.sqrt(2), (2, 2))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_density_matrix(
    dim: int, rng: np.random.Generator, bipartition=None, rank: int | None = None
) -> DensityMatrix:
    g = rng.normal(size=(dim, rank or dim)) + 1j * rng.normal(size=(dim, rank or dim))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(rho / np.trace(rho).real, bipartition)


def random_projector(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    if rank is None:
        rank = int(rng.integers(0, dim + 1))
    u = random_unitary(dim, rng)[:, :rank]
    return u @ u.conj().T


def _matrix(rho) -> np.ndarray:
    return rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)


def partial_trace(rho: DensityMatrix, keep: str = "A") -> DensityMatrix:
    """Reduced state on subsystem ``keep`` ("A" or "B")."""
    if rho.bipartition is None:
        raise ValidationError("partial trace needs a bipartition (m, n)")
    m, n = rho.bipartition
    t = rho.matrix.reshape(m, n, m, n)
    if keep.upper() == "A":
        return DensityMatrix(np.einsum("ajbj->ab", t))
    if keep.upper() == "B":
        return DensityMatrix(np.einsum("iaib->ab", t))
    raise ValidationError(f"keep must be 'A' or 'B', got {keep!r}")


def spectrum(rho) -> tuple[float, ...]:
    """Eigenvalues sorted non-increasing and clipped to [0, 1]."""
    ev = jacobi_eigenvalues(_matrix(rho))
    if ev[-1] < -ATOL:
        raise DensityMatrixError(f"positivity violated: minimum eigenvalue {ev[-1]:.3e}")
    return tuple(float(v) for v in np.clip(ev, 0.0, 1.0))


def _spec(state) -> tuple[float, ...]:
    if isinstance(state, DensityMatrix):
        return state.spectrum()
    if np.ndim(state) == 2:
        return spectrum(state)
    return tuple(sorted((float(v) for v in state), reverse=True))


def von_neumann_entropy(rho, base: float | None = None) -> float:
    return shannon_entropy(_spec(rho), base)


def frame_weight(lam: Partition, spec: Sequence[float]) -> float:
    """tr P_lam rho^{(x)k} = dim U_lam * s_lam(spec), evaluated without overflow."""
    s = schur_branching(lam, spec)
    if s <= 0.0:
        return 0.0
    return math.exp(math.log(dim_u(lam)) + math.log(s))


def young_distribution(state, k: int) -> dict[Partition, float]:
    """Outcome probabilities of the Young-frame measurement on rho^{(x)k}.

    ``state`` is a DensityMatrix or directly a spectrum.
    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    spec = _spec(state)
    return {lam: frame_weight(lam, spec) for lam in enumerate_partitions(k, len(spec))}


@dataclass(frozen=True)
class KWRow:
    lam: Partition
    weight: float
    divergence: float
    bound: float

    @property
    def passed(self) -> bool:
        return self.weight <= self.bound + 1e-12


@dataclass(frozen=True)
class KWReport:
    k: int
    d: int
    eps: float
    rows: list[KWRow]
    outside_weight: float
    outside_bound: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and self.outside_weight <= self.outside_bound + 1e-12


def kw_bound_check(state, k: int, eps: float = 0.1) -> KWReport:
    """Per-frame exponential bound on tr P_lam rho^{(x)k}, and the aggregated
    bound for all frames whose normalization lies outside the eps-ball.
    """
    spec = _spec(state)
    d = len(spec)
    dist = young_distribution(spec, k)
    prefactor = float(k + 1) ** (d * (d - 1) / 2)
    rows = []
    for lam in enumerate_partitions(k):
        div = kl_divergence(normalize(lam), spec)
        bound = prefactor * math.exp(-k * div) if math.isfinite(div) else 0.0
        rows.append(KWRow(lam, dist.get(lam, 0.0), div, bound))
    outside = [r for r in rows if not l1_distance(normalize(r.lam), spec) < eps]
    outside_weight = sum(r.weight for r in outside)
    min_div = min((r.divergence for r in outside), default=math.inf)
    outside_bound = (
        float(k + 1) ** (d * (d + 1) / 2) * math.exp(-k * min_div) if math.isfinite(min_div) else 0.0
    )
    return KWReport(k, d, eps, rows, outside_weight, outside_bound)


def ball_probability(state, k: int, eps: float) -> float:
    """Total weight of frames with sum |lam_bar_i - r_i| < eps (open ball)."""
    if eps <= 0:
        raise ValidationError(f"eps must be positive, got {eps}")
    spec = _spec(state)
    return sum(
        w for lam, w in young_distribution(spec, k).items() if l1_distance(normalize(lam), spec) < eps
    )


@dataclass(frozen=True)
class CompatEntry:
    k: int
    lam: Partition
    mu: Partition
    nu: Partition
    distance: float
    g: int

    def to_record(self) -> dict:
        return {
            "k": self.k,
            "lambda": str(self.lam),
            "mu": str(self.mu),
            "nu": str(self.nu),
            "distance": self.distance,
            "g": str(self.g),
        }


@dataclass(frozen=True)
class CompatReport:
    spec_ab: tuple[float, ...]
    spec_a: tuple[float, ...]
    spec_b: tuple[float, ...]
    entries: list[CompatEntry] = field(default_factory=list)

    def best(self, k: int) -> CompatEntry:
        return next(e for e in self.entries if e.k == k)


def _best_triple(k, lams, mus, nus, d_lam, d_mu, d_nu, cap) -> CompatEntry | None:
    cands = sorted(
        (round(d_lam[i] + d_mu[j] + d_nu[l], 12), i, j, l)
        for i in range(len(lams))
        for j in range(len(mus))
        for l in range(len(nus))
    )
    for _, i, j, l in cands:
        g = kron(lams[i], mus[j], nus[l], cap=cap)
        if g:
            return CompatEntry(k, lams[i], mus[j], nus[l], d_lam[i] + d_mu[j] + d_nu[l], g)
    return None


def compat_search(
    rho_ab: DensityMatrix, k_list: Iterable[int], eps: float = 0.5, cap: int = COMPAT_KRON_CAP
) -> CompatReport:
    """For each k, the triple (lam, mu, nu) with g != 0 closest to the three spectra.

    Distance is the summed L1 distance of lam_bar, mu_bar, nu_bar to
    spec(rho_AB), spec(rho_A), spec(rho_B). Candidates for lam are first
    restricted to the eps-ball around spec(rho_AB); the ball is widened until
    the best triple found lies strictly inside it, which makes the result the
    global minimum. Ties break by decreasing-lex lam, then mu, then nu.
    """
    if rho_ab.bipartition is None:
        raise ValidationError("compat_search needs a bipartition (m, n)")
    if eps <= 0:
        raise ValidationError(f"eps must be positive, got {eps}")
    m, n = rho_ab.bipartition
    r_ab = rho_ab.spectrum()
    r_a = partial_trace(rho_ab, "A").spectrum()
    r_b = partial_trace(rho_ab, "B").spectrum()
    report = CompatReport(r_ab, r_a, r_b)
    for k in k_list:
        all_lams = enumerate_partitions(k, m * n)
        mus = enumerate_partitions(k, m)
        nus = enumerate_partitions(k, n)
        d_all = [l1_distance(normalize(p), r_ab) for p in all_lams]
        d_mu = [l1_distance(normalize(p), r_a) for p in mus]
        d_nu = [l1_distance(normalize(p), r_b) for p in nus]
        radius = eps
        while True:
            inside = [i for i, dist in enumerate(d_all) if dist < radius]
            lams = [all_lams[i] for i in inside]
            d_lam = [d_all[i] for i in inside]
            best = _best_triple(k, lams, mus, nus, d_lam, d_mu, d_nu, cap)
            if best is not None and best.distance < radius:
                break
            if len(inside) == len(all_lams):
                break
            radius = 2 * max(radius, best.distance if best else 0.0)
        if best is None:
            raise ValidationError(f"no triple with nonzero Kronecker coefficient at k={k}")
        report.entries.append(best)
    return report


@dataclass(frozen=True)
class EntropyReport:
    s_ab: float
    s_a: float
    s_b: float
    triple: CompatEntry
    dim_lam: int
    dim_mu: int
    dim_nu: int

    @property
    def subadditive(self) -> bool:
        return self.s_ab <= self.s_a + self.s_b + ATOL

    @property
    def triangle(self) -> bool:
        return self.s_ab >= abs(self.s_a - self.s_b) - ATOL

    @property
    def dimension_inequality(self) -> bool:
        return self.dim_lam <= self.dim_mu * self.dim_nu

    @property
    def passed(self) -> bool:
        return self.subadditive and self.triangle and self.dimension_inequality

    def to_record(self) -> dict:
        return {
            "S_AB": self.s_ab,
            "S_A": self.s_a,
            "S_B": self.s_b,
            "subadditive": self.subadditive,
            "triangle": self.triangle,
            **{f"triple_{key}": v for key, v in self.triple.to_record().items()},
            "dim_u_lambda": str(self.dim_lam),
            "dim_u_mu": str(self.dim_mu),
            "dim_u_nu": str(self.dim_nu),
            "dimension_inequality": self.dimension_inequality,
        }


def entropy_inequality_report(
    rho_ab: DensityMatrix, k: int = 6, base: float | None = None
) -> EntropyReport:
    """Subadditivity and the triangle inequality for rho_AB, plus
    dim U_lam <= dim U_mu dim U_nu for the closest compatible triple at degree k.
    """
    if rho_ab.bipartition is None:
        raise ValidationError("entropy report needs a bipartition (m, n)")
    s_ab = von_neumann_entropy(rho_ab, base)
    s_a = von_neumann_entropy(partial_trace(rho_ab, "A"), base)
    s_b = von_neumann_entropy(partial_trace(rho_ab, "B"), base)
    best = compat_search(rho_ab, [k]).best(k)
    return EntropyReport(s_ab, s_a, s_b, best, dim_u(best.lam), dim_u(best.mu), dim_u(best.nu))


def trace_product_slack(p, q, xi: DensityMatrix) -> float:
    """tr((P (x) Q) xi) - tr(P xi_A) - tr(Q xi_B) + 1, nonnegative for projectors P, Q."""
    if xi.bipartition is None:
        raise ValidationError("trace product needs a bipartition (m, n)")
    p, q = np.asarray(p), np.asarray(q)
    m, n = xi.bipartition
    if p.shape != (m, m) or q.shape != (n, n):
        raise ValidationError(f"projector shapes {p.shape}, {q.shape} do not match {m}x{n}")
    joint = np.trace(np.kron(p, q) @ xi.matrix).real
    left = np.trace(p @ partial_trace(xi, "A").matrix).real
    right = np.trace(q @ partial_trace(xi, "B").matrix).real
    return float(joint - left - right + 1.0)
