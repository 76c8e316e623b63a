"""Irreducible characters of the symmetric group.

Values are computed with the Murnaghan-Nakayama rule: removing the largest
cycle of length r from the class strips a border strip (rim hook) of size r
off the frame, weighted by (-1) to the strip's height. Border strips are
found on the beta-set (first-column hook lengths), where stripping a hook of
size r moves a single bead from position b to b - r.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from pathlib import Path

import numpy as np

from .errors import CacheError, CapExceededError, ValidationError
from .partitions import Partition, _as_partition, class_size, enumerate_partitions

logger = logging.getLogger(__name__)

DEFAULT_CAP = 20


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    n = len(lam)
    return tuple(p + n - 1 - i for i, p in enumerate(lam))


def _from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    parts = [b - (n - 1 - i) for i, b in enumerate(beta)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def rim_hooks(lam: tuple[int, ...], r: int) -> list[tuple[tuple[int, ...], int]]:
    """All (frame with a rim hook of size r removed, sign) pairs."""
    beta = _beta_set(lam)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new = [c for c in beta if c != b] + [target]
        out.append((_from_beta(new), -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], tau: tuple[int, ...]) -> int:
    if not tau:
        return 1 if not lam else 0
    r, rest = tau[0], tau[1:]
    return sum(s * _mn(mu, rest) for mu, s in rim_hooks(lam, r))


def clear_cache() -> None:
    """Drop memoized character values and tables."""
    _mn.cache_clear()
    _build_table.cache_clear()


def character(lam, tau) -> int:
    """chi_lam evaluated on the conjugacy class with cycle type ``tau``."""
    lam, tau = _as_partition(lam), _as_partition(tau)
    if lam.weight != tau.weight:
        raise ValidationError(f"incomparable weights: {lam.weight} vs {tau.weight}")
    return _mn(tuple(lam), tuple(tau))


@dataclass(frozen=True)
class CharacterTable:
    """Exact character table of S_k.

    Rows follow ``enumerate_partitions(k)``; columns run over cycle types in
    the reverse order, so the identity class (1,...,1) comes first.
    """

    degree: int
    rows: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]

    def row_index(self, lam) -> int:
        return self.rows.index(_as_partition(lam))

    def column_index(self, tau) -> int:
        return self.classes.index(_as_partition(tau))

    def value(self, lam, tau) -> int:
        return self.values[self.row_index(lam)][self.column_index(tau)]

    def as_array(self) -> np.ndarray:
        """Values as an object array of Python ints (no overflow)."""
        arr = np.empty((len(self.rows), len(self.classes)), dtype=object)
        for i, row in enumerate(self.values):
            arr[i, :] = row
        return arr

    def orthogonality_holds(self) -> bool:
        """First orthogonality relation, checked with exact integers."""
        kf = factorial(self.degree)
        for i, a in enumerate(self.values):
            for j in range(i, len(self.values)):
                b = self.values[j]
                total = sum(z * x * y for z, x, y in zip(self.sizes, a, b))
                if total != (kf if i == j else 0):
                    return False
        return True

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "rows": [str(p) for p in self.rows],
            "classes": [str(t) for t in self.classes],
            "sizes": [str(s) for s in self.sizes],
            "values": [[str(v) for v in row] for row in self.values],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CharacterTable":
        return cls(
            degree=int(data["degree"]),
            rows=tuple(Partition.parse(s) for s in data["rows"]),
            classes=tuple(Partition.parse(s) for s in data["classes"]),
            sizes=tuple(int(s) for s in data["sizes"]),
            values=tuple(tuple(int(v) for v in row) for row in data["values"]),
        )


@lru_cache(maxsize=None)
def _build_table(k: int) -> CharacterTable:
    rows = tuple(enumerate_partitions(k))
    classes = tuple(reversed(rows))
    values = tuple(tuple(_mn(tuple(lam), tuple(tau)) for tau in classes) for lam in rows)
    sizes = tuple(class_size(tau) for tau in classes)
    return CharacterTable(k, rows, classes, values, sizes)


def cache_path(cache_dir, k: int) -> Path:
    return Path(cache_dir) / f"chartable-{k}.json"


def load_table(path) -> CharacterTable:
    """Read a cached table and verify it before returning."""
    path = Path(path)
    try:
        table = CharacterTable.from_dict(json.loads(path.read_text()))
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise CacheError(f"unreadable character table cache {path}: {exc}") from exc
    expected = tuple(enumerate_partitions(table.degree))
    if table.rows != expected or table.classes != tuple(reversed(expected)):
        raise CacheError(f"cached table {path} has wrong row/column labels")
    if table.sizes != tuple(class_size(t) for t in table.classes):
        raise CacheError(f"cached table {path} has wrong class sizes")
    if not table.orthogonality_holds():
        raise CacheError(f"cached table {path} fails orthogonality")
    return table


def character_table(k: int, cap: int = DEFAULT_CAP, cache_dir=None) -> CharacterTable:
    """Full character table of S_k, optionally backed by an on-disk cache."""
    if k < 1:
        raise ValidationError(f"degree must be >= 1, got {k}")
    if k > cap:
        raise CapExceededError(f"table too large: k={k} exceeds cap {cap}")
    if cache_dir is None:
        return _build_table(k)
    path = cache_path(cache_dir, k)
    if path.exists():
        logger.debug("loading character table from %s", path)
        return load_table(path)
    table = _build_table(k)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(table.to_dict()))
    return table
