"""4×4 matrices over Z[ω] with a √2 denominator exponent."""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .rings import CycloElem, DyadicScalar, mul4, omega_power4, sqrt2_valuation


def _zero_planes() -> np.ndarray:
    p = np.empty((4, 4, 4), dtype=object)
    p.fill(0)
    return p


def _canonicalize(planes: np.ndarray, k: int) -> tuple[np.ndarray, int]:
    if not any(x for x in planes.flat):
        return planes, 0
    if k == 0:
        return planes, 0
    # common case: some entry is not divisible by √2
    if (((planes[0] + planes[2]) | (planes[1] + planes[3])) & 1).any():
        return planes, k
    v = k
    for i in range(4):
        for j in range(4):
            v = min(v, sqrt2_valuation(tuple(int(x) for x in planes[:, i, j]), v))
            if v == 0:
                return planes, k
    half, odd = divmod(v, 2)
    if half:
        planes = planes // (1 << half)
    if odd:
        planes = np.stack(
            [
                (planes[1] - planes[3]) // 2,
                (planes[0] + planes[2]) // 2,
                (planes[1] + planes[3]) // 2,
                (planes[2] - planes[0]) // 2,
            ]
        )
    return planes, k - v


def _plane_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = [None] * 4
    for i in range(4):
        for j in range(4):
            prod = a[i].dot(b[j])
            r = i + j
            if r >= 4:
                r -= 4
                prod = -prod
            out[r] = prod if out[r] is None else out[r] + prod
    return np.stack(out)


class U4Matrix:
    """(1/√2^k)·M with M a 4×4 matrix over Z[ω], in canonical form.

    Entries are stored as four integer coefficient planes: ``planes[c][i][j]``
    is the ω^c coordinate of entry (i, j).
    """

    __slots__ = ("planes", "k", "_key")

    def __init__(self, planes: np.ndarray, k: int = 0, *, canonical: bool = False) -> None:
        if planes.shape != (4, 4, 4):
            raise ValueError("expected coefficient planes of shape (4, 4, 4)")
        if not canonical:
            planes, k = _canonicalize(planes, k)
        self.planes = planes
        self.k = k
        self._key = None

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence], k: int = 0) -> U4Matrix:
        planes = _zero_planes()
        for i, row in enumerate(entries):
            for j, x in enumerate(row):
                coords = x.coords if isinstance(x, CycloElem) else _as_coords(x)
                for c in range(4):
                    planes[c, i, j] = int(coords[c])
        return cls(planes, k)

    @classmethod
    def identity(cls) -> U4Matrix:
        planes = _zero_planes()
        for i in range(4):
            planes[0, i, i] = 1
        return cls(planes, 0, canonical=True)

    @classmethod
    def scalar_omega(cls, j: int) -> U4Matrix:
        return cls.identity().times_omega(j)

    def coords(self, i: int, j: int) -> tuple[int, int, int, int]:
        p = self.planes
        return (p[0, i, j], p[1, i, j], p[2, i, j], p[3, i, j])

    def entry(self, i: int, j: int) -> CycloElem:
        return CycloElem.from_coords(self.coords(i, j))

    def scalar(self, i: int, j: int) -> DyadicScalar:
        return DyadicScalar(self.entry(i, j), self.k)

    @property
    def entries(self) -> tuple[tuple[CycloElem, ...], ...]:
        return tuple(tuple(self.entry(i, j) for j in range(4)) for i in range(4))

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.k, tuple(int(x) for x in self.planes.flat))
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, U4Matrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        rows = [[self.coords(i, j) for j in range(4)] for i in range(4)]
        return f"U4Matrix(k={self.k}, rows={rows})"

    def __matmul__(self, other: U4Matrix) -> U4Matrix:
        return U4Matrix(_plane_product(self.planes, other.planes), self.k + other.k)

    def adjoint(self) -> U4Matrix:
        p = self.planes
        planes = np.stack([p[0].T, -p[3].T, -p[2].T, -p[1].T])
        return U4Matrix(planes, self.k, canonical=True)

    def __neg__(self) -> U4Matrix:
        return U4Matrix(-self.planes, self.k, canonical=True)

    def times_omega(self, j: int) -> U4Matrix:
        j %= 8
        if j == 0:
            return self
        p = self.planes
        if j >= 4:
            p, j = -p, j - 4
        # ω·(a, b, c, d) = (-d, a, b, c)
        for _ in range(j):
            p = np.stack([-p[3], p[0], p[1], p[2]])
        return U4Matrix(p, self.k, canonical=True)

    def phase_to(self, other: U4Matrix) -> int | None:
        """The j in [0, 8) with ω^j·self == other, or None."""
        if self.k != other.k:
            return None
        for j in range(8):
            if self.times_omega(j) == other:
                return j
        return None

    def equal_up_to_phase(self, other: U4Matrix) -> bool:
        return self.phase_to(other) is not None

    def is_unitary(self) -> bool:
        # M·M† = 2^k·I on the numerators, with no renormalization needed
        g = _plane_product(self.planes, self.adjoint().planes)
        target = 1 << self.k
        if any(x for x in g[1:].flat):
            return False
        return all(g[0, i, j] == (target if i == j else 0) for i in range(4) for j in range(4))

    def det(self) -> DyadicScalar:
        """Exact determinant by Leibniz expansion."""
        total = (0, 0, 0, 0)
        for perm in permutations(range(4)):
            term = (1, 0, 0, 0)
            for i, j in enumerate(perm):
                term = mul4(term, self.coords(i, j))
            if _parity(perm):
                term = tuple(-x for x in term)
            total = tuple(x + y for x, y in zip(total, term))
        return DyadicScalar(CycloElem.from_coords(total), 4 * self.k)

    def max_bits(self) -> int:
        return max(int(x).bit_length() for x in self.planes.flat)


def _parity(perm: Sequence[int]) -> int:
    p, inv = list(perm), 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            inv += p[i] > p[j]
    return inv & 1


def _as_coords(x) -> tuple[int, int, int, int]:
    if isinstance(x, int):
        return (x, 0, 0, 0)
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise ValueError(f"non-Gaussian-integer entry {x!r}")
        return (int(x.real), 0, int(x.imag), 0)
    t = tuple(int(v) for v in x)
    if len(t) != 4:
        raise ValueError(f"expected four coordinates, got {x!r}")
    return t


def kron2(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[tuple]]:
    """Kronecker product of two 2×2 coordinate matrices."""
    out = [[None] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            for p in range(2):
                for q in range(2):
                    out[2 * i + p][2 * j + q] = mul4(_as_coords(a[i][j]), _as_coords(b[p][q]))
    return out


def product(mats: Iterable[U4Matrix]) -> U4Matrix:
    """Ordered product, evaluated as a balanced tree to keep operands small."""
    items = list(mats)
    if not items:
        return U4Matrix.identity()
    while len(items) > 1:
        nxt = [items[i] @ items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


__all__ = ["U4Matrix", "kron2", "product", "omega_power4"]
