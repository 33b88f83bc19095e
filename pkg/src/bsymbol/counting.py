"""Exact combinatorics: binomials, composition counts and composition streams.

All counts are Python ints, so nothing overflows and nothing is rounded.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterator

from .errors import InvalidB

Composition = tuple[int, ...]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``.

    Total on all integers, so boundary terms of the distribution sums vanish
    without special cases; ``binom(n, 0) == 1`` for every ``n >= 0``.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def n_infty(r: int, L: int) -> int:
    """Number of compositions of ``L`` into ``r`` positive parts."""
    return binom(L - 1, r - 1)


def n_b(b: int, r: int, L: int) -> int:
    """Number of compositions of ``L`` into ``r`` parts, each in ``[1, b-2]``.

    Inclusion-exclusion over the set of parts forced above ``b - 2``:
    ``sum_j (-1)^j C(r, j) C(L - j(b-2) - 1, r - 1)``.  ``n_b(b, 0, 0) == 1``.
    """
    if b < 3:
        raise InvalidB(f"n_b needs b >= 3, got {b}")
    if r < 0 or L < 0:
        return 0
    if r == 0:
        return 1 if L == 0 else 0
    cap = b - 2
    return sum((-1) ** j * binom(r, j) * binom(L - j * cap - 1, r - 1) for j in range(r + 1))


def compositions(total: int, parts: int) -> Iterator[Composition]:
    """Positive compositions of ``total`` into ``parts`` parts, lexicographically."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if total < parts:
        return

    def rec(rem: int, k: int) -> Iterator[Composition]:
        if k == 1:
            yield (rem,)
            return
        for a in range(1, rem - k + 2):
            for tail in rec(rem - a, k - 1):
                yield (a,) + tail

    yield from rec(total, parts)


def partitions(total: int, parts: int, largest: int | None = None) -> Iterator[Composition]:
    """Partitions of ``total`` into exactly ``parts`` positive parts, non-increasing."""
    largest = total if largest is None else largest
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    for a in range(min(largest, total - parts + 1), 0, -1):
        if a * parts < total:
            break
        for tail in partitions(total - a, parts - 1, a):
            yield (a,) + tail


def arrangements(parts: Composition) -> int:
    """Number of distinct orderings of a multiset of parts."""
    out = math.factorial(len(parts))
    for c in Counter(parts).values():
        out //= math.factorial(c)
    return out
