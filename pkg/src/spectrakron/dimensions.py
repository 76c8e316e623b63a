"""Dimensions of the S_k irreducible U_lam and the U(d) irreducible V_lam.

All arithmetic is exact; bounds are returned as integers or Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .errors import InternalConsistencyError, ValidationError
from .partitions import Partition, _as_partition, conjugate


def hook_lengths(lam) -> list[int]:
    lam = _as_partition(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def dim_u(lam) -> int:
    """Dimension of the S_k irreducible: k! over the product of hook lengths."""
    lam = _as_partition(lam)
    if lam.weight < 1:
        raise ValidationError("dim_u needs a partition of weight >= 1")
    return factorial(lam.weight) // prod(hook_lengths(lam))


def dim_v(lam, d: int) -> int:
    """Dimension of the U(d) irreducible with highest weight ``lam`` (Weyl formula).

    ``lam`` is padded with zeros to d rows; more than d rows gives 0.
    """
    lam = _as_partition(lam)
    if d < 1:
        raise ValidationError(f"d must be >= 1, got {d}")
    if len(lam) > d:
        return 0
    padded = list(lam) + [0] * (d - len(lam))
    num = prod(
        padded[i] - padded[j] - i + j for i in range(d) for j in range(i + 1, d)
    )
    den = prod(factorial(m) for m in range(1, d))
    q, r = divmod(num, den)
    if r:
        raise InternalConsistencyError(f"Weyl dimension of {lam} at d={d} is not integral")
    return q


@dataclass(frozen=True)
class DimensionReport:
    """Exact dimensions together with the two textbook bounds.

    ``u_lower`` is only defined when the frame fits in d rows; otherwise it
    is None (the factorials in the bound would have negative arguments).
    """

    lam: Partition
    d: int
    dim_u: int
    dim_v: int
    v_upper: int
    u_lower: Fraction | None
    u_upper: Fraction

    @property
    def holds(self) -> bool:
        lower_ok = self.u_lower is None or self.u_lower <= self.dim_u
        return lower_ok and self.dim_u <= self.u_upper and self.dim_v <= self.v_upper

    def to_record(self) -> dict:
        return {
            "lambda": str(self.lam),
            "d": self.d,
            "dim_u": str(self.dim_u),
            "dim_v": str(self.dim_v),
            "v_upper": str(self.v_upper),
            "u_lower": None if self.u_lower is None else str(self.u_lower),
            "u_upper": str(self.u_upper),
            "holds": self.holds,
        }


def bounds(lam, d: int) -> DimensionReport:
    """Compute dim_u, dim_v and their bounds; raise if a bound is violated.

    The lower bound's product runs over the nonzero rows of ``lam``.
    """
    lam = _as_partition(lam)
    k = lam.weight
    kf = factorial(k)
    v_upper = (k + 1) ** (d * (d - 1) // 2)
    u_upper = Fraction(kf, prod(factorial(p) for p in lam))
    u_lower = None
    if len(lam) <= d:
        u_lower = Fraction(kf, prod(factorial(p + d - i - 1) for i, p in enumerate(lam)))
    report = DimensionReport(lam, d, dim_u(lam), dim_v(lam, d), v_upper, u_lower, u_upper)
    if not report.holds:
        raise InternalConsistencyError(f"dimension bounds violated: {report}")
    return report
