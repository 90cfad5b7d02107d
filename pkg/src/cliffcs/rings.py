"""Exact arithmetic in Z[ω], ω = exp(iπ/4), and its √2-denominator extension.

An element a + bω + cω² + dω³ is stored as four Python integers.  Since
ω⁴ = -1, multiplication is a negacyclic convolution of the coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import NotDivisible, NotRealInteger

Coords = tuple[int, int, int, int]


def mul4(x: Coords, y: Coords) -> Coords:
    a0, a1, a2, a3 = x
    b0, b1, b2, b3 = y
    return (
        a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
        a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
        a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
        a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
    )


def conj4(x: Coords) -> Coords:
    a, b, c, d = x
    return (a, -d, -c, -b)


def times_sqrt2(x: Coords) -> Coords:
    # (ω - ω³)(a + bω + cω² + dω³)
    a, b, c, d = x
    return (b - d, a + c, b + d, c - a)


def divisible_by_sqrt2(x: Coords) -> bool:
    a, b, c, d = x
    return not ((a + c) & 1 or (b + d) & 1)


def div_sqrt2(x: Coords) -> Coords:
    """Exact x/√2; the caller guarantees divisibility."""
    a, b, c, d = x
    return ((b - d) >> 1, (a + c) >> 1, (b + d) >> 1, (c - a) >> 1)


def sqrt2_valuation(x: Coords, cap: int) -> int:
    """Largest v ≤ cap with √2^v dividing x (cap when x = 0)."""
    if not any(x):
        return cap
    # 2^t divides x exactly when every coordinate is divisible by 2^t.
    t = min((c & -c).bit_length() - 1 for c in x if c)
    v = 2 * t
    if v >= cap:
        return cap
    y = tuple(c >> t for c in x)
    while v < cap and divisible_by_sqrt2(y):
        y = div_sqrt2(y)
        v += 1
    return v


def div_sqrt2_power(x: Coords, v: int) -> Coords:
    """Exact x/√2^v; the caller guarantees divisibility."""
    half, odd = divmod(v, 2)
    y = tuple(c >> half for c in x)
    return div_sqrt2(y) if odd else y


def omega_power4(x: Coords, j: int) -> Coords:
    """x·ω^j, a signed rotation of the coordinates."""
    j %= 8
    if j >= 4:
        x = (-x[0], -x[1], -x[2], -x[3])
        j -= 4
    a, b, c, d = x
    if j == 0:
        return x
    if j == 1:
        return (-d, a, b, c)
    if j == 2:
        return (-c, -d, a, b)
    return (-b, -c, -d, a)


class CycloElem:
    """An element of Z[ω] with arbitrary-precision coordinates."""

    __slots__ = ("_c",)

    def __init__(self, a: int = 0, b: int = 0, c: int = 0, d: int = 0) -> None:
        self._c: Coords = (int(a), int(b), int(c), int(d))

    @classmethod
    def from_coords(cls, coords) -> CycloElem:
        return cls(*coords)

    @classmethod
    def omega(cls, j: int = 1) -> CycloElem:
        return cls.from_coords(omega_power4((1, 0, 0, 0), j))

    @classmethod
    def sqrt2(cls) -> CycloElem:
        return cls(0, 1, 0, -1)

    @classmethod
    def gaussian(cls, re: int, im: int) -> CycloElem:
        return cls(re, 0, im, 0)

    @property
    def coords(self) -> Coords:
        return self._c

    a = property(lambda self: self._c[0])
    b = property(lambda self: self._c[1])
    c = property(lambda self: self._c[2])
    d = property(lambda self: self._c[3])

    def __repr__(self) -> str:
        return "CycloElem({}, {}, {}, {})".format(*self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == (other, 0, 0, 0)
        if isinstance(other, CycloElem):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return any(self._c)

    def __add__(self, other: Union[int, CycloElem]) -> CycloElem:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem.from_coords(x + y for x, y in zip(self._c, o))

    __radd__ = __add__

    def __neg__(self) -> CycloElem:
        return CycloElem.from_coords(-x for x in self._c)

    def __sub__(self, other: Union[int, CycloElem]) -> CycloElem:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem.from_coords(x - y for x, y in zip(self._c, o))

    def __rsub__(self, other: Union[int, CycloElem]) -> CycloElem:
        return (-self) + other

    def __mul__(self, other: Union[int, CycloElem]) -> CycloElem:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem.from_coords(mul4(self._c, o))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycloElem:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result, base = (1, 0, 0, 0), self._c
        while n:
            if n & 1:
                result = mul4(result, base)
            base = mul4(base, base)
            n >>= 1
        return CycloElem.from_coords(result)

    def conj(self) -> CycloElem:
        return CycloElem.from_coords(conj4(self._c))

    def is_real(self) -> bool:
        return conj4(self._c) == self._c

    def norm_sq(self) -> CycloElem:
        """conj(x)·x, a non-negative element of Z[√2]."""
        return CycloElem.from_coords(mul4(conj4(self._c), self._c))

    def to_complex(self) -> complex:
        # Debugging aid only; nothing in the exact core calls this.
        import cmath

        w = cmath.exp(1j * cmath.pi / 4)
        return sum(x * w**i for i, x in enumerate(self._c))


def _coerce(x) -> Coords | None:
    if isinstance(x, CycloElem):
        return x.coords
    if isinstance(x, int):
        return (x, 0, 0, 0)
    return None


def cyclo_mul(x: CycloElem, y: CycloElem) -> CycloElem:
    return x * y


def cyclo_conj(x: CycloElem) -> CycloElem:
    return x.conj()


def sqrt2_divide(x: CycloElem) -> CycloElem:
    """Return y with y·√2 = x, or raise NotDivisible."""
    if not divisible_by_sqrt2(x.coords):
        raise NotDivisible(f"{x!r} is not divisible by √2")
    return CycloElem.from_coords(div_sqrt2(x.coords))


def is_real(x: CycloElem) -> bool:
    return x.is_real()


def real_value_times_sqrt2_power(x: CycloElem, k: int) -> int:
    """The rational integer m with x = m·√2^k.

    Raises NotRealInteger when x/√2^k is not an ordinary integer.
    """
    c = x.coords
    for _ in range(k):
        if not divisible_by_sqrt2(c):
            raise NotRealInteger(f"{x!r} is not an integer multiple of √2^{k}")
        c = div_sqrt2(c)
    if c[1] or c[2] or c[3]:
        raise NotRealInteger(f"{x!r}/√2^{k} is not a rational integer")
    return c[0]


@dataclass(frozen=True)
class DyadicScalar:
    """num/√2^k, kept in canonical form (k = 0 or num not divisible by √2)."""

    num: CycloElem
    k: int = 0

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("denominator exponent must be non-negative")
        c, k = self.num.coords, self.k
        if k:
            v = sqrt2_valuation(c, k)
            c, k = div_sqrt2_power(c, v), k - v
        if not any(c):
            k = 0
        object.__setattr__(self, "num", CycloElem.from_coords(c))
        object.__setattr__(self, "k", k)

    @classmethod
    def one(cls) -> DyadicScalar:
        return cls(CycloElem(1))

    def __mul__(self, other: DyadicScalar) -> DyadicScalar:
        return DyadicScalar(self.num * other.num, self.k + other.k)

    def __add__(self, other: DyadicScalar) -> DyadicScalar:
        k = max(self.k, other.k)
        return DyadicScalar(_lift(self.num, k - self.k) + _lift(other.num, k - other.k), k)

    def __neg__(self) -> DyadicScalar:
        return DyadicScalar(-self.num, self.k)

    def __sub__(self, other: DyadicScalar) -> DyadicScalar:
        return self + (-other)

    def conj(self) -> DyadicScalar:
        return DyadicScalar(self.num.conj(), self.k)


def _lift(x: CycloElem, t: int) -> CycloElem:
    c = x.coords
    for _ in range(t):
        c = times_sqrt2(c)
    return CycloElem.from_coords(c)
