"""Shannon entropy and relative entropy of finite distributions (natural log)."""
from __future__ import annotations

import math
from itertools import zip_longest
from typing import Iterable


def shannon_entropy(p: Iterable[float], base: float | None = None) -> float:
    """-sum p_i log p_i with 0 log 0 = 0. Natural log unless ``base`` is given."""
    h = -sum(x * math.log(x) for x in p if x > 0)
    h = h + 0.0  # normalizes -0.0
    return h / math.log(base) if base else h


def kl_divergence(p: Iterable[float], q: Iterable[float]) -> float:
    """D(p||q) = sum p_i (log p_i - log q_i); +inf when q_i = 0 < p_i.

    Vectors of different lengths are padded with zeros.
    """
    total = 0.0
    for a, b in zip_longest(p, q, fillvalue=0.0):
        if a <= 0:
            continue
        if b <= 0:
            return math.inf
        total += a * (math.log(a) - math.log(b))
    return total
