"""Colex ranking/unranking of k-subsets and subset enumeration helpers.

The colex rank of a k-subset S = {s_0 < ... < s_{k-1}} of {0..n-1} is
sum_j C(s_j, j+1); ranks run from 0 to C(n,k)-1.  Verification jobs
partition the rank interval so that workers enumerate disjoint slices.
"""

from __future__ import annotations

from math import comb
from typing import Iterator


def colex_rank(subset: tuple[int, ...]) -> int:
    return sum(comb(c, j + 1) for j, c in enumerate(sorted(subset)))


def colex_unrank(rank: int, n: int, k: int) -> tuple[int, ...]:
    if not 0 <= rank < comb(n, k):
        raise ValueError(f"rank {rank} out of range for C({n},{k})")
    out = [0] * k
    while k > 0:
        n -= 1
        offset = comb(n, k)
        if rank >= offset:
            rank -= offset
            k -= 1
            out[k] = n
    return tuple(out)


def iter_colex(n: int, k: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
    """k-subsets of {0..n-1} in colex order, ranks [start, stop)."""
    total = comb(n, k)
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError("bad colex range")
    if start == stop:
        return
    cur = list(colex_unrank(start, n, k))
    for _ in range(stop - start):
        yield tuple(cur)
        # advance: find lowest position that can move up
        i = 0
        while i + 1 < k and cur[i] + 1 == cur[i + 1]:
            i += 1
        if i + 1 == k and cur[i] + 1 == n:
            return
        cur[i] += 1
        for j in range(i):
            cur[j] = j
