"""Kontsevich's recursion for rational plane curves, used as an independent check."""
from __future__ import annotations

from functools import lru_cache
from math import comb

from ..errors import DomainError


def kontsevich_oracle(d: int) -> int:
    """Number of rational degree-d plane curves through 3d - 1 general points."""
    if d <= 0:
        raise DomainError(f"degree must be positive, got {d}")
    return _kontsevich(d)


@lru_cache(maxsize=None)
def _kontsevich(d: int) -> int:
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += (
            _kontsevich(d1)
            * _kontsevich(d2)
            * d1 * d1 * d2
            * (d2 * comb(3 * d - 4, 3 * d1 - 2) - d1 * comb(3 * d - 4, 3 * d1 - 1))
        )
    return total
