"""Exact arithmetic in GF(p^m).

Elements are stored as a single integer ``rep`` in ``[0, q)`` whose base-p
digits are the polynomial-basis coordinates (digit ``i`` is the coefficient
of ``x^i``).  Multiplication is schoolbook polynomial multiplication followed
by reduction modulo the field's monic irreducible polynomial; there are no
log/antilog tables.

>>> F = make_field(2, 3, [1, 1, 0, 1])     # x^3 + x + 1
>>> F(2) * F(4)                             # x * x^2 = x + 1
GF(8)(3)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoBuiltinModulus,
    NonPrimeCharacteristic,
    OrderTooLarge,
    ReducibleModulus,
)

DEFAULT_MAX_ORDER = 2**20

# Conway polynomials, constant term first.
CONWAY_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power ``q`` into ``(p, m)``; raise if ``q`` is not one."""
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return p, m


# -- polynomials over GF(p) as coefficient lists, constant term first ------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _monic_polys(degree: int, p: int) -> Iterator[list[int]]:
    for r in range(p**degree):
        coeffs = []
        for _ in range(degree):
            r, c = divmod(r, p)
            coeffs.append(c)
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1 .. deg // 2``."""
    deg = len(modulus) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for dd in range(1, deg // 2 + 1):
        for g in _monic_polys(dd, p):
            if not _poly_mod(modulus, g, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^m) with a fixed polynomial basis.

    Construct through :func:`make_field`; calling an instance with an integer
    rep returns the corresponding :class:`FieldElement`.
    """

    characteristic: int
    degree: int
    modulus: tuple[int, ...]
    order: int = field(init=False, compare=False)

    def __post_init__(self):
        p, m = self.characteristic, self.degree
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("degree must be >= 1")
        mod = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "order", p**m)
        if m == 1:
            if mod != (0, 1):
                raise ReducibleModulus("prime fields use the placeholder modulus [0, 1]")
            return
        if len(mod) != m + 1:
            raise ReducibleModulus(f"modulus must have {m + 1} coefficients, got {len(mod)}")
        if any(not 0 <= c < p for c in mod) or mod[-1] != 1:
            raise ReducibleModulus("modulus must be monic with coefficients in [0, p)")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {list(mod)} is reducible over GF({p})")

    # -- rep-level helpers ------------------------------------------------

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def m(self) -> int:
        return self.degree

    def digits(self, rep: int) -> list[int]:
        p = self.characteristic
        out = []
        for _ in range(self.degree):
            rep, c = divmod(rep, p)
            out.append(c)
        return out

    def from_digits(self, coeffs: Sequence[int]) -> int:
        rep = 0
        for c in reversed(coeffs):
            rep = rep * self.characteristic + c
        return rep

    def add_reps(self, a: int, b: int) -> int:
        p = self.characteristic
        if self.degree == 1:
            return (a + b) % p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def neg_rep(self, a: int) -> int:
        p = self.characteristic
        if self.degree == 1:
            return -a % p
        return self.from_digits([-x % p for x in self.digits(a)])

    def mul_reps(self, a: int, b: int) -> int:
        p = self.characteristic
        if self.degree == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        red = _poly_mod([c % p for c in prod], self.modulus, p)
        return self.from_digits(red)

    def pow_rep(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul_reps(result, base)
            base = self.mul_reps(base, base)
            e >>= 1
        return result

    def inv_rep(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self.pow_rep(a, self.order - 2)

    # -- vectorised helpers used by exhaustive scans -----------------------

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise field addition of integer rep arrays."""
        p = self.characteristic
        if self.degree == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.result_type(a, b))
        scale = 1
        for _ in range(self.degree):
            out += ((a // scale + b // scale) % p) * scale
            scale *= p
        return out

    def scale_table(self, c: int) -> np.ndarray:
        """``table[x] = c * x`` for every rep ``x``."""
        return np.array([self.mul_reps(c, x) for x in range(self.order)], dtype=np.int64)

    # -- elements ----------------------------------------------------------

    def __call__(self, value: int) -> FieldElement:
        """Element with the given rep (must lie in ``[0, q)``)."""
        value = int(value)
        if not 0 <= value < self.order:
            raise ValueError(f"rep {value} outside [0, {self.order})")
        return FieldElement(value, self)

    def embed(self, value: int) -> FieldElement:
        """Image of an integer under the ring map Z -> GF(q)."""
        return FieldElement(int(value) % self.characteristic, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(r, self) for r in range(self.order)]

    def to_json(self) -> dict:
        return {"p": self.characteristic, "m": self.degree, "modulus": list(self.modulus)}

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.order})"
        return f"GF({self.order}, modulus={list(self.modulus)})"

    def __str__(self):
        return f"GF({self.order})"


@dataclass(frozen=True, eq=False)
class FieldElement:
    rep: int
    field: FieldSpec

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.embed(int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field.add_reps(self.rep, o.rep), self.field)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field.neg_rep(self.rep), self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field.mul_reps(self.rep, o.rep), self.field)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv_rep(self.rep), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        e = int(e)
        if e < 0:
            return self.inverse() ** -e
        return FieldElement(self.field.pow_rep(self.rep, e), self.field)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.rep == other.rep and self.field == other.field
        if isinstance(other, (int, np.integer)):
            return self.rep == self.field.embed(int(other)).rep
        return NotImplemented

    def __hash__(self):
        return hash((self.rep, self.field.order))

    def __bool__(self):
        return self.rep != 0

    def __int__(self):
        return self.rep

    __index__ = __int__

    def __repr__(self):
        return f"GF({self.field.order})({self.rep})"


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None,
               max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    """Build and validate GF(p^m).

    For ``m > 1`` without an explicit ``modulus`` the Conway polynomial from
    :data:`CONWAY_MODULI` is used; the modulus is given constant term first.
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("degree must be >= 1")
    if p**m > max_order:
        raise OrderTooLarge(f"order {p}^{m} exceeds the bound {max_order}")
    if m == 1:
        if modulus is not None and tuple(modulus) not in ((0, 1),):
            raise ReducibleModulus("prime fields take no modulus other than [0, 1]")
        return FieldSpec(p, 1, (0, 1))
    if modulus is None:
        try:
            modulus = CONWAY_MODULI[(p, m)]
        except KeyError:
            raise NoBuiltinModulus(f"no built-in modulus for GF({p}^{m}); pass one") from None
    return FieldSpec(p, m, tuple(modulus))


def field_of_order(q: int, modulus: Sequence[int] | None = None,
                   max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    p, m = prime_power(q)
    return make_field(p, m, modulus, max_order=max_order)


def field_from_json(obj: dict) -> FieldSpec:
    return make_field(int(obj["p"]), int(obj.get("m", 1)), obj.get("modulus"))


def enumerate_elements(f: FieldSpec) -> list[FieldElement]:
    """All ``q`` elements in ascending rep order, zero first."""
    return f.elements()


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "neg": lambda a, b: -a,
    "inv": lambda a, b: a.inverse(),
    "pow": lambda a, b: a ** b,
}


def arith(op: str, a: FieldElement, b: FieldElement | int | None = None) -> FieldElement:
    """Named-operation entry point; ``b`` is ignored for ``neg`` and ``inv``."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op in ("add", "sub", "mul", "div") and isinstance(b, FieldElement) and b.field != a.field:
        raise FieldMismatch(f"cannot combine elements of {a.field} and {b.field}")
    return fn(a, b)
