"""Colexicographic ranking of k-subsets.

In colex order ``S < T`` iff ``max(S ^ T)`` lies in ``T``. The rank of a
sorted subset ``s_0 < s_1 < ... < s_{k-1}`` is ``sum(comb(s_i, i + 1))``,
so ranking needs no lookup table and does not depend on ``n``.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Sequence


def subset_rank(subset: Iterable[int]) -> int:
    s = sorted(subset)
    if len(set(s)) != len(s):
        raise ValueError(f"repeated element in subset {s}")
    if s and s[0] < 0:
        raise ValueError(f"negative element in subset {s}")
    return sum(comb(x, i + 1) for i, x in enumerate(s))


def subset_unrank(rank: int, n: int, k: int) -> tuple[int, ...]:
    """Inverse of :func:`subset_rank` on the k-subsets of ``range(n)``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if not 0 <= rank < comb(n, k):
        raise ValueError(f"rank {rank} out of range for C({n},{k})={comb(n, k)}")
    out = []
    c = n - 1
    for i in range(k, 0, -1):
        while comb(c, i) > rank:
            c -= 1
        out.append(c)
        rank -= comb(c, i)
        c -= 1
    return tuple(reversed(out))


def colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of ``range(n)`` listed by increasing colex rank."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return sorted(combinations(range(n), k), key=lambda s: s[::-1])


def rank_table(subsets: Sequence[tuple[int, ...]]) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(subsets)}
