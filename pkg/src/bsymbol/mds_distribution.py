"""Closed-form b-weight distribution of MDS codes.

The distribution is assembled from three exact ingredients:

* :func:`hamming_count` -- full-weight codewords of an ``[m, m-d+1, d]`` MDS code;
* :func:`f_count` -- codewords of an ``[L, L-d+1, d]`` MDS code split into
  blocks ``L_1, ..., L_I`` whose blocks start and end nonzero and whose cyclic
  ``(b-1)``-weight is full (``L``);
* :func:`b_distribution` -- the count of codewords of each b-weight, summed
  over the block structure of their zero runs.

No floating point is used anywhere; rational bounds are kept as
:class:`fractions.Fraction` until floored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .counting import arrangements, binom, n_b, partitions
from .errors import InvalidB, InvalidProfile, NotMDSQuery
from .weights import CLOSED_FORM, SPECIAL_CASE, DistributionQuery, WeightDistribution


def hamming_count(m: int, d: int, q: int) -> int:
    """Codewords of Hamming weight ``m`` in an ``[m, m-d+1, d]_q`` MDS code.

    >>> hamming_count(3, 3, 11)
    10
    """
    if m < d or m < 1:
        return 0
    return sum((-1) ** j * binom(m, j) * (q ** (m + 1 - d - j) - 1) for j in range(m - d + 1))


def hamming_distribution(q: int, n: int, k: int) -> WeightDistribution:
    """Hamming weight distribution of an ``[n, k]_q`` MDS code."""
    query = DistributionQuery(q, n, k, 1)
    d = query.d
    counts = {w: 0 for w in range(n + 1)}
    counts[0] = 1
    for w in range(d, n + 1):
        counts[w] = binom(n, w) * hamming_count(w, d, q)
    return WeightDistribution(query, counts, CLOSED_FORM)


def f_weight(b: int, L: int, m: int) -> int:
    """Zero patterns of a length-``L`` block with ``m`` nonzero coordinates.

    The block starts and ends nonzero and every zero run has length in
    ``[1, b-2]``; with ``e`` zero runs there are ``C(m-1, e)`` ways to split
    the nonzeros and ``n_b(b, e, L-m)`` ways to size the zero runs.
    """
    if b < 3:
        raise InvalidB(f"f_weight needs b >= 3, got {b}")
    if not 1 <= m <= L:
        return 0
    if m == L:
        return 1
    if m < -(-(L + b - 2) // (b - 1)):
        return 0
    lo = -(-(L - m) // (b - 2))
    return sum(binom(m - 1, e) * n_b(b, e, L - m) for e in range(lo, min(m - 1, L - m) + 1))


@dataclass(frozen=True)
class FProfile:
    """Block lengths ``(L_1, ..., L_I)`` together with ``b``, ``d`` and ``q``."""

    b: int
    d: int
    lengths: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        if self.b < 2:
            raise InvalidB(f"b must be >= 2, got {self.b}")
        if not self.lengths or min(self.lengths) < 1:
            raise InvalidProfile("lengths must be a nonempty list of positive integers")
        if self.d < 1:
            raise InvalidProfile("d must be >= 1")
        if self.total < self.d:
            raise InvalidProfile(f"sum of lengths {self.total} is below d = {self.d}")

    @property
    def total(self) -> int:
        return sum(self.lengths)


@lru_cache(maxsize=None)
def _f_count(b: int, d: int, q: int, lengths: tuple[int, ...]) -> int:
    # lengths arrive sorted; the count is symmetric in the blocks
    if b == 2:
        return hamming_count(sum(lengths), d, q)
    # sum over (m_1..m_I) of prod f_weight(L_i, m_i) * hamming_count(sum m_i):
    # convolve the per-block weight polynomials in m, then weight by total m
    poly = [1]
    for L in lengths:
        block = [f_weight(b, L, m) for m in range(L + 1)]
        out = [0] * (len(poly) + L)
        for i, a in enumerate(poly):
            if a:
                for j, c in enumerate(block):
                    if c:
                        out[i + j] += a * c
        poly = out
    return sum(c * hamming_count(m, d, q) for m, c in enumerate(poly) if c)


def f_count(profile: FProfile) -> int:
    """Codewords of the ``[L, L-d+1, d]_q`` MDS code counted by ``profile``.

    >>> f_count(FProfile(b=3, d=3, lengths=(4,), q=11))
    100
    """
    return _f_count(profile.b, profile.d, profile.q, tuple(sorted(profile.lengths)))


def _f(b: int, d: int, q: int, lengths: Sequence[int]) -> int:
    if sum(lengths) < d:
        return 0
    return _f_count(b, d, q, tuple(sorted(lengths)))


@lru_cache(maxsize=None)
def _composition_sum(b: int, d: int, q: int, total: int, parts: int) -> int:
    """Sum of the F-count over all compositions of ``total`` into ``parts`` parts."""
    return sum(arrangements(p) * _f(b, d, q, p) for p in partitions(total, parts))


@dataclass(frozen=True)
class SummationBounds:
    m1: Fraction
    m2: Fraction
    delta_n: int


def summation_bounds(w: int, b: int, t: int, d: int, n: int) -> SummationBounds:
    """Exact upper limits on the number of interior zero blocks for weight ``w``."""
    m1 = min(Fraction(w - t - 1, b), Fraction(w - t - d, b - 1))
    m2 = min(Fraction(w - b, b), Fraction(w - d, b - 1) - 1)
    return SummationBounds(m1, m2, int(w == n))


def _closed_form_count(w: int, n: int, d: int, b: int, q: int) -> int:
    total = 0
    if w == n:
        # no interior zero block, wrap-around zero run of length t <= b-2
        total += sum((t + 1) * _f(b, d, q, (n - t,)) for t in range(b - 1))
    # no interior zero block, wrap-around run of length n-w+b-1 >= b-1
    total += (n - w + b) * _f(b, d, q, (w - b + 1,))
    # i >= 1 interior zero blocks, wrap-around run t <= b-2
    for t in range(b - 1):
        top = math.floor(summation_bounds(w, b, t, d, n).m1)
        for i in range(1, top + 1):
            ways = binom(n - w + i - 1, i - 1)
            if ways:
                total += (t + 1) * ways * _composition_sum(b, d, q, w - t - i * (b - 1), i + 1)
    # i >= 1 interior zero blocks, wrap-around run t >= b-1
    top = math.floor(summation_bounds(w, b, 0, d, n).m2)
    for t in range(b - 1, n - w + b):
        for i in range(1, top + 1):
            ways = binom(n - w - t + b + i - 2, i - 1)
            if ways:
                total += (t + 1) * ways * _composition_sum(b, d, q, w - (i + 1) * (b - 1), i + 1)
    return total


def b_distribution(query: DistributionQuery) -> WeightDistribution:
    """Number of codewords of each b-weight in an ``[n, k, n-k+1]_q`` MDS code.

    When ``d + b - 1 >= n`` every nonzero codeword has b-weight ``n``: a
    nonzero codeword vanishes on at most ``k - 1 = n - d`` positions, so no
    cyclic zero run reaches length ``b``.
    """
    if not isinstance(query, DistributionQuery):
        raise NotMDSQuery("expected a DistributionQuery")
    q, n, k, b, d = query.q, query.n, query.k, query.b, query.d
    if b == 1:
        return hamming_distribution(q, n, k)
    counts = {w: 0 for w in range(n + 1)}
    counts[0] = 1
    if d + b - 1 >= n:
        counts[n] = q**k - 1
        return WeightDistribution(query, counts, SPECIAL_CASE)
    for w in range(d + b - 1, n + 1):
        counts[w] = _closed_form_count(w, n, d, b, q)
    return WeightDistribution(query, counts, CLOSED_FORM)


# -- closed special cases, coded independently of b_distribution ----------

def pair_distribution(q: int, n: int, k: int) -> WeightDistribution:
    """Symbol-pair (b = 2) distribution written directly in Hamming counts.

    The ``i``-th term collects codewords whose zero set has ``i`` runs once
    the wrap-around is accounted for; the coefficient of each full-weight
    count is a closed binomial instead of a sum over run placements.
    Needs ``k >= 2``; for ``k = 1`` there is no weight above ``d = n``.
    """
    query = DistributionQuery(q, n, k, 2)
    if k < 2:
        raise NotMDSQuery(f"symbol-pair formula needs k >= 2, got k = {k}")
    d = query.d
    counts = {w: 0 for w in range(n + 1)}
    counts[0] = 1
    for w in range(d + 1, n + 1):
        s = hamming_count(n, d, q) if w == n else 0
        top1 = math.floor(min(Fraction(w - 1, 2), Fraction(w - d)))
        for i in range(1, top1 + 1):
            s += binom(n - w + i - 1, i - 1) * binom(w - i - 1, i) * hamming_count(w - i, d, q)
        top2 = math.floor(min(Fraction(w - 2, 2), Fraction(w - d - 1)))
        for i in range(1, top2 + 2):
            coeff = 2 * binom(n - w + i - 1, i - 1) + binom(n - w + i - 1, i)
            s += coeff * binom(w - i - 1, i - 1) * hamming_count(w - i, d, q)
        counts[w] = s
    return WeightDistribution(query, counts, CLOSED_FORM)


def min_weight_count(q: int, n: int) -> int:
    """Codewords of the minimum b-weight ``d + b - 1`` when it is below ``n``."""
    return n * (q - 1)


def full_weight_count_b3(q: int, d: int) -> int:
    """3-weight ``n`` count of an ``[d+3, 4, d]_q`` MDS code."""
    return q**4 - (d + 3) * q + d + 2


def full_weight_count_k_eq_b_plus_1(q: int, d: int, b: int) -> int:
    """b-weight ``n`` count of an ``[d+b, b+1, d]_q`` MDS code (``b, d >= 3``)."""
    n = d + b
    head = sum((t + 1) * _f(b, d, q, (n - t,)) for t in range(b))
    return head + d * hamming_count(d + 1, d, q) + (d - 1) * d * hamming_count(d, d, q)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    applicable: bool
    passed: bool | None = None
    expected: object = None
    actual: object = None
    reason: str = ""

    def __str__(self):
        if not self.applicable:
            return f"SKIP {self.name}: {self.reason}"
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name}: expected {self.expected}, got {self.actual}"


def corollary_check(query: DistributionQuery,
                    dist: WeightDistribution | None = None) -> list[IdentityCheck]:
    """Compare ``dist`` (default: :func:`b_distribution`) with every closed
    special case whose hypotheses ``query`` satisfies."""
    dist = b_distribution(query) if dist is None else dist
    q, n, k, b, d = query.q, query.n, query.k, query.b, query.d
    out = [IdentityCheck("completeness", True, dist.total == q**k, q**k, dist.total)]

    name = "symbol-pair formula"
    if b == 2 and k >= 2:
        ref = pair_distribution(q, n, k).as_list()
        out.append(IdentityCheck(name, True, ref == dist.as_list(), ref, dist.as_list()))
    else:
        out.append(IdentityCheck(name, False, reason="needs b = 2 and k >= 2"))

    name = "minimum b-weight count n(q-1)"
    if b >= 2 and d + b - 1 < n:
        w = d + b - 1
        ref = min_weight_count(q, n)
        out.append(IdentityCheck(name, True, dist[w] == ref, ref, dist[w]))
    else:
        out.append(IdentityCheck(name, False, reason="needs b >= 2 and d + b - 1 < n"))

    name = "full 3-weight count q^4-(d+3)q+d+2"
    if b == 3 and k == 4 and d >= 3:
        ref = full_weight_count_b3(q, d)
        out.append(IdentityCheck(name, True, dist[n] == ref, ref, dist[n]))
    else:
        out.append(IdentityCheck(name, False, reason="needs b = 3, k = 4, d >= 3"))

    name = "full b-weight count for k = b+1"
    if b >= 3 and d >= 3 and k == b + 1:
        ref = full_weight_count_k_eq_b_plus_1(q, d, b)
        out.append(IdentityCheck(name, True, dist[n] == ref, ref, dist[n]))
    else:
        out.append(IdentityCheck(name, False, reason="needs b >= 3, d >= 3, k = b + 1"))
    return out
