"""Cyclic b-symbol reads, b-weight and b-distance, and the b-shape of a vector.

Vectors may hold :class:`~bsymbol.gf.FieldElement` values or plain integer
reps; only zero/nonzero matters for weights and shapes.  Indices wrap
cyclically: coordinate ``n + j`` is coordinate ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    EmptyVector,
    FieldMismatch,
    InvalidB,
    InvalidShape,
    LengthMismatch,
    ZeroVector,
)
from .gf import FieldElement


def _flags(v: Sequence) -> list[bool]:
    if len(v) == 0:
        raise EmptyVector("vector has no coordinates")
    return [bool(x) for x in v]


def _check_b(b: int, least: int = 1) -> None:
    if b < least:
        raise InvalidB(f"b must be >= {least}, got {b}")


def _window_weight(z: Sequence[bool], b: int) -> int:
    # window i is nonzero iff the next nonzero at or after i (cyclically) is
    # fewer than b steps away; one backward pass over two periods finds it
    n = len(z)
    nxt = 3 * n + b
    count = 0
    for i in range(2 * n - 1, -1, -1):
        if z[i - n] if i >= n else z[i]:
            nxt = i
        if i < n and nxt - i < b:
            count += 1
    return count


def b_weight(v: Sequence, b: int) -> int:
    """Number of nonzero cyclic windows ``(v_i, ..., v_{i+b-1})``, ``1 <= i <= n``.

    >>> b_weight([1, 0, 0, 1, 0], 2)
    4
    """
    _check_b(b)
    return _window_weight(_flags(v), b)


def b_distance(x: Sequence, y: Sequence, b: int) -> int:
    """Number of positions whose length-``b`` cyclic windows of ``x`` and ``y`` differ."""
    _check_b(b)
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)} differ")
    fields = {e.field for e in (*x, *y) if isinstance(e, FieldElement)}
    if len(fields) > 1:
        raise FieldMismatch("vectors are over different fields")
    return _window_weight(_flags([a != c for a, c in zip(x, y)]), b)


@dataclass(frozen=True)
class ReadVector:
    windows: tuple[tuple, ...]

    @property
    def weight(self) -> int:
        return sum(1 for w in self.windows if any(w))

    def __len__(self):
        return len(self.windows)

    def __iter__(self):
        return iter(self.windows)


def read_vector(v: Sequence, b: int) -> ReadVector:
    """The ``n`` cyclic windows of ``b`` consecutive coordinates.

    >>> read_vector([1, 2, 3], 2).windows
    ((1, 2), (2, 3), (3, 1))
    """
    _check_b(b)
    n = len(v)
    if n == 0:
        raise EmptyVector("vector has no coordinates")
    return ReadVector(tuple(tuple(v[(i + j) % n] for j in range(b)) for i in range(n)))


def b_weight_array(nonzero: np.ndarray, b: int) -> np.ndarray:
    """Row-wise b-weights of a boolean ``(N, n)`` nonzero mask."""
    _check_b(b)
    window = nonzero.copy()
    for s in range(1, b):
        window |= np.roll(nonzero, -s, axis=1)
    return window.sum(axis=1)


@dataclass(frozen=True)
class ShapeDecomposition:
    """Block sizes ``(n_0, n_1, ..., n_l, n_{l+1})`` of a b-shape.

    ``n_0``/``n_{l+1}`` are the leading and trailing zero runs (possibly
    empty); odd interior blocks start and end nonzero and have full cyclic
    ``(b-1)``-weight; even interior blocks are zero runs of length ``>= b-1``.
    """

    b: int
    sizes: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.sizes) - 2

    @property
    def t(self) -> int:
        return self.sizes[0] + self.sizes[-1]

    @property
    def odd_sizes(self) -> tuple[int, ...]:
        return self.sizes[1:-1:2]

    @property
    def even_sizes(self) -> tuple[int, ...]:
        return self.sizes[2:-1:2]

    @property
    def blocks(self) -> tuple[range, ...]:
        """Coordinate ranges ``N_0, ..., N_{l+1}`` (1-indexed, possibly empty)."""
        out, lo = [], 1
        for s in self.sizes:
            out.append(range(lo, lo + s))
            lo += s
        return tuple(out)

    def __str__(self):
        inner = ", ".join(str(s) for s in self.sizes[1:-1])
        return f"({self.sizes[0]} | {inner} | {self.sizes[-1]})"


def check_shape(v: Sequence, shape: ShapeDecomposition) -> None:
    """Raise :class:`InvalidShape` unless ``v`` satisfies (C1)-(C4) for ``shape``."""
    z = _flags(v)
    n, b, sizes = len(z), shape.b, shape.sizes
    if sum(sizes) != n:
        raise InvalidShape(f"block sizes sum to {sum(sizes)}, vector has length {n}")
    if len(sizes) < 3 or len(sizes) % 2 == 0:
        raise InvalidShape(f"number of interior blocks must be odd, got {len(sizes) - 2}")
    if True not in z:
        raise InvalidShape("zero vector has no b-shape")
    first = z.index(True)
    last = n - 1 - z[::-1].index(True)
    if sizes[0] != first:
        raise InvalidShape("leading block is not the leading zero run")
    if sizes[-1] != n - 1 - last:
        raise InvalidShape("trailing block is not the trailing zero run")
    lo = first
    for i in range(1, len(sizes) - 1):
        seg = z[lo:lo + sizes[i]]
        lo += sizes[i]
        if not seg:
            raise InvalidShape(f"interior block {i} is empty")
        if i % 2:
            if not (seg[0] and seg[-1]) or _window_weight(seg, b - 1) != len(seg):
                raise InvalidShape(f"odd block {i} does not have full (b-1)-weight")
        elif True in seg or len(seg) < b - 1:
            raise InvalidShape(f"even block {i} is not a zero run of length >= b-1")


def shape_decompose(v: Sequence, b: int) -> ShapeDecomposition:
    """The b-shape of a nonzero vector (``b >= 2``).

    Interior zero runs of length ``>= b-1`` become even blocks; shorter runs
    stay inside the surrounding odd block.
    """
    _check_b(b, 2)
    z = _flags(v)
    if True not in z:
        raise ZeroVector("zero vector has no b-shape")
    n = len(z)
    first = z.index(True)
    last = n - 1 - z[::-1].index(True)
    sizes = [first]
    start = i = first
    while i <= last:
        if z[i]:
            i += 1
            continue
        j = i
        while not z[j]:
            j += 1
        if j - i >= b - 1:
            sizes += [i - start, j - i]
            start = j
        i = j
    sizes += [last + 1 - start, n - 1 - last]
    shape = ShapeDecomposition(b, tuple(sizes))
    check_shape(z, shape)
    return shape


def weight_from_shape(s: ShapeDecomposition, n: int | None = None, b: int | None = None) -> int:
    """b-weight of any vector with shape ``s``, from the block sizes alone."""
    sizes = s.sizes
    n = sum(sizes) if n is None else n
    b = s.b if b is None else b
    if sum(sizes) != n:
        raise InvalidShape(f"block sizes sum to {sum(sizes)}, expected {n}")
    l, t = len(sizes) - 2, sizes[0] + sizes[-1]
    if l < 1 or l % 2 == 0:
        raise InvalidShape(f"number of interior blocks must be odd, got {l}")
    if min(sizes) < 0 or min(sizes[1:-1]) < 1:
        raise InvalidShape("interior blocks must be nonempty")
    if l > 1 and min(sizes[2:-1:2]) < b - 1:
        raise InvalidShape("even blocks must have length >= b-1")
    odd = sum(sizes[1:-1:2])
    if t <= b - 2:
        if l == 1:
            return n
        return t + odd + (l - 1) * (b - 1) // 2
    if l == 1:
        return n - (t + 1 - b)
    return odd + (l + 1) * (b - 1) // 2
