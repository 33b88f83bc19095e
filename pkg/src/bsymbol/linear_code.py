"""Linear codes over GF(q): Reed-Solomon construction, encoding, exhaustive
enumeration, shortening and brute-force minimum distance.

Coordinates are 1-indexed wherever a position is passed in or out.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateEvalPoints,
    EnumerationTooLarge,
    FieldMismatch,
    InvalidDimension,
    LengthExceedsField,
    NotMDS,
    RankDeficient,
    ShortenTooLarge,
)
from .gf import FieldElement, FieldSpec, enumerate_elements, field_from_json

DEFAULT_ENUM_BOUND = 10**8
# messages per vectorised block when scanning
DEFAULT_CHUNK = 1 << 16


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    q: int

    @property
    def mds(self) -> bool:
        return self.d == self.n - self.k + 1

    def __str__(self):
        return f"[{self.n},{self.k},{self.d}]_{self.q}"


def _row_reduce(rows: list[list[int]], f: FieldSpec, pivot_order: Sequence[int]) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan elimination on rep rows, trying pivot columns in ``pivot_order``.

    Returns the nonzero reduced rows and their pivot columns (0-indexed).
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in pivot_order:
        sel = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = f.inv_rep(rows[r][col])
        rows[r] = [f.mul_reps(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = f.neg_rep(rows[i][col])
                rows[i] = [f.add_reps(x, f.mul_reps(c, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows: Sequence[Sequence[int]], f: FieldSpec) -> int:
    if not rows:
        return 0
    reduced, _ = _row_reduce([list(r) for r in rows], f, range(len(rows[0])))
    return len(reduced)


class LinearCode:
    """A linear code given by a full-rank ``k x n`` generator matrix.

    ``d`` may be passed when it is known by construction (Reed-Solomon,
    shortening of an MDS code); otherwise it is computed by brute force on
    first access.
    """

    def __init__(self, field: FieldSpec, generator: Sequence[Sequence[int | FieldElement]],
                 d: int | None = None, mds: bool = False):
        reps = []
        for row in generator:
            out = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.field != field:
                        raise FieldMismatch("generator entry from a different field")
                    x = x.rep
                x = int(x)
                if not 0 <= x < field.order:
                    raise ValueError(f"generator entry {x} outside [0, {field.order})")
                out.append(x)
            reps.append(tuple(out))
        if not reps or not reps[0]:
            raise InvalidDimension("generator must have at least one row and column")
        n = len(reps[0])
        if any(len(r) != n for r in reps):
            raise DimensionMismatch("generator rows have unequal lengths")
        k = len(reps)
        if k > n:
            raise InvalidDimension(f"k = {k} exceeds n = {n}")
        if rank(reps, field) != k:
            raise RankDeficient("generator rows are linearly dependent")
        self.field = field
        self._rows = tuple(reps)
        self.n, self.k = n, k
        self._d = d
        if mds and d is not None and d != n - k + 1:
            raise NotMDS(f"d = {d} does not meet the Singleton bound {n - k + 1}")
        self._mds_claim = mds

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def generator(self) -> tuple[tuple[FieldElement, ...], ...]:
        return tuple(tuple(self.field(x) for x in row) for row in self._rows)

    @property
    def generator_reps(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def d(self) -> int:
        if self._d is None:
            self._d = min_distance_bruteforce(self)
        return self._d

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.n, self.k, self.d, self.q)

    @property
    def mds(self) -> bool:
        if self._mds_claim:
            return True
        return self.d == self.n - self.k + 1

    @property
    def size(self) -> int:
        return self.q**self.k

    @cached_property
    def _scale_tables(self) -> np.ndarray:
        # tables[j, col][x] = x * g[j][col]
        f = self.field
        cache: dict[int, np.ndarray] = {}
        out = np.empty((self.k, self.n, f.order), dtype=np.int64)
        for j, row in enumerate(self._rows):
            for col, g in enumerate(row):
                if g not in cache:
                    cache[g] = f.scale_table(g)
                out[j, col] = cache[g]
        return out

    def codeword_block(self, start: int, stop: int) -> np.ndarray:
        """Rep array of shape ``(stop - start, n)`` for messages ``start .. stop-1``.

        Message index ``i`` has base-q digits ``(m_1, ..., m_k)`` with ``m_1``
        most significant, so blocks follow lexicographic message order.
        """
        return self.codewords_at(np.arange(start, stop, dtype=np.int64))

    def codewords_at(self, indices: np.ndarray) -> np.ndarray:
        """Rep array with one row per message index in ``indices``."""
        q, k = self.q, self.k
        idx = np.asarray(indices, dtype=np.int64)
        tables = self._scale_tables
        out = np.zeros((len(idx), self.n), dtype=np.int64)
        for j in range(k - 1, -1, -1):
            idx, digit = np.divmod(idx, q)
            contrib = tables[j][:, digit].T
            out = self.field.add_arrays(out, contrib)
        return out

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.field == other.field
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.field, self._rows))

    def __repr__(self):
        d = "?" if self._d is None else self._d
        return f"LinearCode([{self.n},{self.k},{d}] over {self.field})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state.pop("_scale_tables", None)
        return state


@dataclass(frozen=True)
class Codeword:
    coords: tuple[FieldElement, ...]
    code: LinearCode

    @property
    def reps(self) -> tuple[int, ...]:
        return tuple(c.rep for c in self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class CoordinateSet:
    """Strictly increasing 1-indexed coordinate positions."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError("indices must be strictly increasing")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, positions: Iterable[int]) -> CoordinateSet:
        return cls(tuple(sorted(set(positions))))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


def rs_code(field: FieldSpec, n: int, k: int,
            eval_points: Sequence[FieldElement | int] | None = None) -> LinearCode:
    """Reed-Solomon code ``{(f(a_1), ..., f(a_n)) : deg f < k}``.

    Row ``i`` of the generator is ``(a_j ** i)_j``.  The default evaluation
    points are the first ``n`` field elements by rep, zero included.
    """
    if n > field.order:
        raise LengthExceedsField(f"n = {n} exceeds field order {field.order}")
    if not 1 <= k <= n:
        raise InvalidDimension(f"need 1 <= k <= n, got k = {k}, n = {n}")
    if eval_points is None:
        points = enumerate_elements(field)[:n]
    else:
        points = [p if isinstance(p, FieldElement) else field(p) for p in eval_points]
        if len(points) != n:
            raise DimensionMismatch(f"expected {n} evaluation points, got {len(points)}")
        if any(p.field != field for p in points):
            raise FieldMismatch("evaluation point from a different field")
        if len({p.rep for p in points}) != n:
            raise DuplicateEvalPoints("evaluation points must be distinct")
    gen = [[(a ** i).rep for a in points] for i in range(k)]
    return LinearCode(field, gen, d=n - k + 1, mds=True)


def encode(code: LinearCode, message: Sequence[FieldElement | int]) -> Codeword:
    if len(message) != code.k:
        raise DimensionMismatch(f"message length {len(message)} != k = {code.k}")
    f = code.field
    msg = []
    for m in message:
        if isinstance(m, FieldElement):
            if m.field != f:
                raise FieldMismatch("message symbol from a different field")
            msg.append(m.rep)
        else:
            msg.append(f(m).rep)
    coords = [0] * code.n
    for mj, row in zip(msg, code.generator_reps):
        if mj:
            for col, g in enumerate(row):
                coords[col] = f.add_reps(coords[col], f.mul_reps(mj, g))
    return Codeword(tuple(f(c) for c in coords), code)


def check_enumerable(code: LinearCode, bound: int = DEFAULT_ENUM_BOUND) -> None:
    if code.size > bound:
        raise EnumerationTooLarge(f"{code.q}^{code.k} = {code.size} codewords exceed the bound {bound}")


def iter_blocks(code: LinearCode, start: int = 0, stop: int | None = None,
                chunk: int = DEFAULT_CHUNK) -> Iterator[np.ndarray]:
    """Rep arrays covering message indices ``[start, stop)`` in order."""
    stop = code.size if stop is None else stop
    for lo in range(start, stop, chunk):
        yield code.codeword_block(lo, min(lo + chunk, stop))


def enumerate_codewords(code: LinearCode, start: int = 0, stop: int | None = None,
                        bound: int = DEFAULT_ENUM_BOUND) -> Iterator[Codeword]:
    """Every codeword once, in lexicographic message order.

    ``start``/``stop`` select a range of message indices so that a scan can
    be split across workers or resumed.
    """
    check_enumerable(code, bound)
    f = code.field
    for block in iter_blocks(code, start, stop):
        for row in block.tolist():
            yield Codeword(tuple(f(x) for x in row), code)


def shorten(code: LinearCode, s: CoordinateSet | Iterable[int]) -> LinearCode:
    """Subcode vanishing on the 1-indexed positions ``s``, restricted to the rest.

    Built by row reduction with the columns of ``s`` as pivots, so no
    enumeration is needed and shortenings compose.
    """
    if not isinstance(s, CoordinateSet):
        s = CoordinateSet.of(s)
    if len(s) >= code.k:
        raise ShortenTooLarge(f"|S| = {len(s)} must be < k = {code.k}")
    if any(not 1 <= i <= code.n for i in s):
        raise ValueError(f"positions must lie in [1, {code.n}]")
    if not code.mds:
        raise NotMDS("shortening is only supported for MDS codes")
    if not len(s):
        return LinearCode(code.field, code.generator_reps, d=code.d, mds=True)
    cols = [i - 1 for i in s]
    rest = [j for j in range(code.n) if j not in cols]
    reduced, pivots = _row_reduce(list(code.generator_reps), code.field, cols + rest)
    if pivots[: len(cols)] != cols:
        raise NotMDS("shortened positions are not independent")
    keep = [row for row, pc in zip(reduced, pivots) if pc not in cols]
    gen = [[row[j] for j in rest] for row in keep]
    return LinearCode(code.field, gen, d=code.d, mds=True)


def min_distance_bruteforce(code: LinearCode, bound: int = DEFAULT_ENUM_BOUND) -> int:
    """Minimum Hamming weight over nonzero codewords, by full scan."""
    check_enumerable(code, bound)
    best = code.n + 1
    for lo, block in zip(itertools.count(0, DEFAULT_CHUNK), iter_blocks(code)):
        wt = np.count_nonzero(block, axis=1)
        if lo == 0:
            wt = wt[1:]
        if wt.size:
            best = min(best, int(wt.min()))
    return best


def code_from_json(obj: dict, bound: int = DEFAULT_ENUM_BOUND) -> LinearCode:
    """Load ``{"field": {...}, "n", "k", "rows", "assert_mds"?}``.

    With ``assert_mds`` the minimum distance is checked by brute force against
    ``n - k + 1``.
    """
    f = field_from_json(obj["field"])
    rows = obj["rows"]
    n, k = int(obj["n"]), int(obj["k"])
    if len(rows) != k or any(len(r) != n for r in rows):
        raise DimensionMismatch(f"rows do not form a {k} x {n} matrix")
    code = LinearCode(f, rows)
    if obj.get("assert_mds"):
        d = min_distance_bruteforce(code, bound)
        if d != n - k + 1:
            raise NotMDS(f"minimum distance {d} != n - k + 1 = {n - k + 1}")
        code = LinearCode(f, rows, d=d, mds=True)
    return code


def load_code(path: str | Path, bound: int = DEFAULT_ENUM_BOUND) -> LinearCode:
    with open(path) as fh:
        return code_from_json(json.load(fh), bound)


def code_to_json(code: LinearCode, assert_mds: bool = False) -> dict:
    return {
        "field": code.field.to_json(),
        "n": code.n,
        "k": code.k,
        "rows": [list(r) for r in code.generator_reps],
        "assert_mds": assert_mds,
    }
