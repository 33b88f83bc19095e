"""Exhaustive ground truth for the closed forms.

Every codeword is generated and counted.  For short codes (``n`` up to
:data:`MAX_PATTERN_BITS`) a scan first tallies how many codewords have each
zero pattern; weights and block conditions are then evaluated once per
pattern with the scalar metric functions.  Both b-weight and the F-profile
conditions depend on a codeword only through which coordinates are zero, so
the tallies are exact.  Longer codes are scanned with the vectorised window
weight directly.

Nothing here imports the closed-form module.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .bsymbol_metric import b_weight, b_weight_array
from .counting import compositions
from .errors import BoundExceeded, FieldTooSmall, InvalidB
from .gf import FieldSpec
from .linear_code import (
    DEFAULT_CHUNK,
    DEFAULT_ENUM_BOUND,
    LinearCode,
    check_enumerable,
    iter_blocks,
    rs_code,
)
from .weights import BRUTE_FORCE, DistributionQuery, WeightDistribution

MAX_PATTERN_BITS = 20
COMPOSITION_BOUND = 20


@dataclass(frozen=True)
class OracleReport:
    query: object
    histogram: dict[int, int]
    elapsed: float
    enumerated: int

    @property
    def total(self) -> int:
        return sum(self.histogram.values())


# low-digit codewords held in memory per split scan
LOW_TARGET = 1 << 15
# codewords combined per vectorised step
STEP_TARGET = 1 << 20


def _split_digits(code: LinearCode) -> int:
    """Number of trailing message digits enumerated as one precomputed table."""
    r = 0
    while r < code.k and code.q ** (r + 1) <= LOW_TARGET:
        r += 1
    return max(r, 1)


def _scan_patterns(code: LinearCode, h_lo: int, h_hi: int, r: int) -> np.ndarray:
    """Zero-pattern tally over messages ``h * q^r + l`` for ``h_lo <= h < h_hi``.

    Codeword(h, l) = codeword(h, 0) + codeword(0, l), and a coordinate of the
    sum is zero exactly when the low part equals the negated high part, so
    each of the ``q^r`` low codewords is compared against every prefix.
    """
    q, n = code.q, code.n
    size = q**r
    low = code.codeword_block(0, size)
    values = np.arange(q)
    # bit_tables[j][v, l] = (low[l, j] != v) << j
    dtype = np.int32 if n < 31 else np.int64
    bit_tables = [((low[:, j][None, :] != values[:, None]).astype(dtype) << j) for j in range(n)]
    neg = np.array([code.field.neg_rep(x) for x in range(q)])
    hist = np.zeros(1 << n, dtype=np.int64)
    step = max(1, STEP_TARGET // size)
    for lo in range(h_lo, h_hi, step):
        prefixes = np.arange(lo, min(lo + step, h_hi), dtype=np.int64) * size
        target = neg[code.codewords_at(prefixes)]
        patterns = bit_tables[0][target[:, 0]]
        for j in range(1, n):
            patterns = patterns + bit_tables[j][target[:, j]]
        hist += np.bincount(patterns.ravel(), minlength=hist.size)
    return hist


def _scan_weights(code: LinearCode, start: int, stop: int, chunk: int,
                  bs: tuple[int, ...]) -> dict[int, np.ndarray]:
    out = {b: np.zeros(code.n + 1, dtype=np.int64) for b in bs}
    for block in iter_blocks(code, start, stop, chunk):
        nz = block != 0
        for b in bs:
            out[b] += np.bincount(b_weight_array(nz, b), minlength=code.n + 1)
    return out


def _ranges(total: int, workers: int, chunk: int | None) -> list[tuple[int, int]]:
    if chunk is None:
        chunk = max(1, -(-total // max(1, workers)))
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


def _run(fn, jobs: list[tuple], workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def default_workers() -> int:
    return os.cpu_count() or 1


def zero_pattern_histogram(code: LinearCode, workers: int = 1, chunk: int | None = None,
                           bound: int = DEFAULT_ENUM_BOUND) -> np.ndarray:
    """``hist[p]`` = number of codewords whose nonzero set has bitmask ``p``.

    Bit ``j`` of ``p`` is set when coordinate ``j + 1`` is nonzero.  The
    range of leading message digits is split into independent parts (one
    per worker by default, or ``chunk`` prefixes each) whose histograms are
    summed.
    """
    check_enumerable(code, bound)
    if code.n > MAX_PATTERN_BITS:
        raise BoundExceeded(f"n = {code.n} exceeds {MAX_PATTERN_BITS} pattern bits")
    r = _split_digits(code)
    prefixes = code.q ** (code.k - r)
    jobs = [(code, lo, hi, r) for lo, hi in _ranges(prefixes, workers, chunk)]
    return sum(_run(_scan_patterns, jobs, workers))


@lru_cache(maxsize=64)
def _cached_patterns(code: LinearCode, bound: int) -> np.ndarray:
    return zero_pattern_histogram(code, bound=bound)


def pattern_flags(p: int, n: int) -> list[bool]:
    return [bool(p >> j & 1) for j in range(n)]


def scan(code: LinearCode, bs: Iterable[int], workers: int = 1, chunk: int | None = None,
         bound: int = DEFAULT_ENUM_BOUND) -> dict[int, OracleReport]:
    """One exhaustive pass producing the b-weight histogram for every ``b`` in ``bs``."""
    bs = tuple(sorted(set(bs)))
    if not bs or bs[0] < 1:
        raise InvalidB("every b must be >= 1")
    check_enumerable(code, bound)
    t0 = time.perf_counter()
    n = code.n
    hists = {b: [0] * (n + 1) for b in bs}
    if n <= MAX_PATTERN_BITS:
        pat = zero_pattern_histogram(code, workers, chunk, bound)
        for p in np.flatnonzero(pat):
            c = int(pat[p])
            flags = pattern_flags(int(p), n)
            for b in bs:
                hists[b][b_weight(flags, b)] += c
    else:
        jobs = [(code, lo, hi, DEFAULT_CHUNK, bs) for lo, hi in _ranges(code.size, workers, chunk)]
        for part in _run(_scan_weights, jobs, workers):
            for b in bs:
                for w, c in enumerate(part[b].tolist()):
                    hists[b][w] += c
    elapsed = time.perf_counter() - t0
    return {
        b: OracleReport((code.q, code.n, code.k, b), dict(enumerate(h)), elapsed, code.size)
        for b, h in hists.items()
    }


def _as_distribution(code: LinearCode, b: int, report: OracleReport) -> WeightDistribution:
    query = DistributionQuery(code.q, code.n, code.k, b)
    meta = {"elapsed": report.elapsed, "enumerated": report.enumerated}
    return WeightDistribution(query, dict(report.histogram), BRUTE_FORCE, meta)


def brute_distribution(code: LinearCode, b: int, workers: int = 1,
                       bound: int = DEFAULT_ENUM_BOUND) -> WeightDistribution:
    """b-weight histogram over all ``q^k`` codewords of ``code``."""
    return _as_distribution(code, b, scan(code, [b], workers, bound=bound)[b])


def brute_distributions(code: LinearCode, bs: Iterable[int], workers: int = 1,
                        bound: int = DEFAULT_ENUM_BOUND) -> dict[int, WeightDistribution]:
    reports = scan(code, bs, workers, bound=bound)
    return {b: _as_distribution(code, b, r) for b, r in reports.items()}


def profile_condition(flags: Sequence[bool], lengths: Sequence[int], b: int) -> bool:
    """Every block starts and ends nonzero and the cyclic (b-1)-weight is full."""
    lo = 0
    for L in lengths:
        if not (flags[lo] and flags[lo + L - 1]):
            return False
        lo += L
    return b_weight(flags, b - 1) == len(flags)


def brute_F(profile, eval_field: FieldSpec, eval_points: Sequence | None = None,
            bound: int = DEFAULT_ENUM_BOUND) -> int:
    """Count codewords of an ``[L, L-d+1, d]`` Reed-Solomon code meeting the
    block conditions of ``profile`` (any object with ``b``, ``d``, ``lengths``).
    """
    lengths = tuple(profile.lengths)
    L, d, b = sum(lengths), profile.d, profile.b
    if b < 2:
        raise InvalidB(f"b must be >= 2, got {b}")
    if eval_field.order < L:
        raise FieldTooSmall(f"GF({eval_field.order}) has fewer than {L} evaluation points")
    code = rs_code(eval_field, L, L - d + 1, eval_points)
    check_enumerable(code, bound)
    if L <= MAX_PATTERN_BITS:
        pat = _cached_patterns(code, bound)
        return sum(int(pat[p]) for p in np.flatnonzero(pat)
                   if profile_condition(pattern_flags(int(p), L), lengths, b))
    starts = np.cumsum((0,) + lengths[:-1])
    ends = starts + np.array(lengths) - 1
    count = 0
    for block in iter_blocks(code):
        nz = block != 0
        ok = nz[:, starts].all(axis=1) & nz[:, ends].all(axis=1)
        ok &= b_weight_array(nz, b - 1) == L
        count += int(ok.sum())
    return count


def brute_compositions(b: int, r: int, L: int) -> int:
    """Compositions of ``L`` into ``r`` parts in ``[1, b-2]``, by enumeration."""
    if b < 3:
        raise InvalidB(f"needs b >= 3, got {b}")
    if r > COMPOSITION_BOUND or L > COMPOSITION_BOUND:
        raise BoundExceeded(f"r and L must be <= {COMPOSITION_BOUND}")
    if r < 0 or L < 0:
        return 0
    if r == 0:
        return int(L == 0)
    return sum(1 for c in compositions(L, r) if max(c) <= b - 2)
