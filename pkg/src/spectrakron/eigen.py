"""Cyclic Jacobi eigenvalue iteration for small complex Hermitian matrices."""
from __future__ import annotations

import math

import numpy as np

from .errors import InternalConsistencyError, ValidationError


def off_diagonal_norm(a: np.ndarray) -> float:
    # summed directly: total minus diagonal mass loses ~sqrt(eps) to cancellation
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(math.sqrt(np.sum(np.abs(a[mask]) ** 2)))


def jacobi_eigenvalues(
    mat, tol: float = 1e-13, max_sweeps: int = 100, herm_atol: float = 1e-10
) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted non-increasing.

    Each step first rotates the phase of row/column q so the pivot a_pq is
    real, then applies the usual real Jacobi rotation. Iteration stops when
    the off-diagonal Frobenius mass drops below ``tol``.
    """
    a = np.array(mat, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    resid = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if resid > herm_atol:
        raise ValidationError(f"matrix is not Hermitian: residual {resid:.3e}")
    a = (a + a.conj().T) / 2
    n = a.shape[0]
    for _ in range(max_sweeps):
        if off_diagonal_norm(a) < tol:
            return np.sort(np.real(np.diag(a)))[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                phase = apq / mag
                a[:, q] *= np.conj(phase)
                a[q, :] *= phase
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise InternalConsistencyError(
        f"Jacobi iteration did not converge in {max_sweeps} sweeps "
        f"(off-diagonal mass {off_diagonal_norm(a):.3e})"
    )
