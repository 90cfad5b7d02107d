"""The SO(6) representation of two-qubit Clifford+CS operators.

A 4×4 unitary U acts on bivectors by U(v∧w) = (Uv)∧(Uw).  Writing that
action in the orthonormal basis

    B1 = i(e1∧e2 - e3∧e4)/√2    B2 = (e1∧e2 + e3∧e4)/√2
    B3 = i(e2∧e3 - e1∧e4)/√2    B4 = (e2∧e4 + e3∧e1)/√2
    B5 = i(e2∧e4 - e3∧e1)/√2    B6 = (e2∧e3 + e1∧e4)/√2

gives a 6×6 special orthogonal matrix whose entries, for Clifford+CS
operators, are integers over a power of √2.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import _tables
from .errors import InsufficientExponent, NotInGroup
from .rings import div_sqrt2_power, mul4, omega_power4, sqrt2_valuation
from .u4 import U4Matrix

Rows = tuple[tuple[int, ...], ...]

# Index pairs (p < q) spanning Λ²C⁴, and each basis vector as
# {pair index: power of ω} with the common 1/√2 factored out.
_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_BASIS = (
    {0: 2, 5: 6},  # i·e12 - i·e34
    {0: 0, 5: 0},  # e12 + e34
    {3: 2, 2: 6},  # i·e23 - i·e14
    {4: 0, 1: 4},  # e24 - e13
    {4: 2, 1: 2},  # i·e24 + i·e13
    {3: 0, 2: 0},  # e23 + e14
)


class SO6Matrix:
    """M/√2^k with M a 6×6 integer matrix; k = 0 or some entry of M is odd."""

    __slots__ = ("rows", "k")

    def __init__(self, rows: Sequence[Sequence[int]], k: int = 0) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if len(rows) != 6 or any(len(r) != 6 for r in rows):
            raise ValueError("SO6Matrix needs 6×6 entries")
        if k >= 2:
            nz = [x for r in rows for x in r if x]
            if not nz:
                k = 0
            else:
                t = min(min((x & -x).bit_length() - 1 for x in nz), k // 2)
                if t:
                    rows = tuple(tuple(x >> t for x in r) for r in rows)
                    k -= 2 * t
        elif k and not any(x for r in rows for x in r):
            k = 0
        self.rows: Rows = rows
        self.k: int = k

    @classmethod
    def identity(cls) -> SO6Matrix:
        return cls(tuple(tuple(int(i == j) for j in range(6)) for i in range(6)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SO6Matrix):
            return NotImplemented
        return self.k == other.k and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.k, self.rows))

    def __repr__(self) -> str:
        return f"SO6Matrix(k={self.k}, rows={list(map(list, self.rows))})"

    def __matmul__(self, other: SO6Matrix) -> SO6Matrix:
        cols = list(zip(*other.rows))
        rows = tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows)
        return SO6Matrix(rows, self.k + other.k)

    def __neg__(self) -> SO6Matrix:
        return SO6Matrix(tuple(tuple(-x for x in r) for r in self.rows), self.k)

    @property
    def T(self) -> SO6Matrix:
        return SO6Matrix(tuple(zip(*self.rows)), self.k)

    def is_orthogonal(self) -> bool:
        # integer rows: M·Mᵀ = 2^k·I
        rows, target = self.rows, 1 << self.k
        for i in range(6):
            for j in range(i, 6):
                if sum(a * b for a, b in zip(rows[i], rows[j])) != (target if i == j else 0):
                    return False
        return True

    def det_numerator(self) -> int:
        return _int_det([list(r) for r in self.rows])

    def is_special_orthogonal(self) -> bool:
        return self.is_orthogonal() and self.det_numerator() == 1 << (3 * self.k)

    def sign_canonical(self) -> SO6Matrix:
        """±self, chosen so the first nonzero entry in row-major order is positive."""
        for r in self.rows:
            for x in r:
                if x:
                    return self if x > 0 else -self
        return self

    def is_signed_permutation(self) -> bool:
        if self.k:
            return False
        return all(sorted(abs(x) for x in r) == [0, 0, 0, 0, 0, 1] for r in self.rows) and all(
            sorted(abs(x) for x in c) == [0, 0, 0, 0, 0, 1] for c in zip(*self.rows)
        )

    def max_bits(self) -> int:
        return max(abs(x).bit_length() for r in self.rows for x in r)


def _int_det(m: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    n, sign, prev = len(m), 1, 1
    m = [row[:] for row in m]
    for i in range(n - 1):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if m[r][i]), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------- isomorphism


def wedge_square(u: U4Matrix) -> list[list[tuple[int, int, int, int]]]:
    """Numerators of Λ²(u) in the e_p∧e_q basis; the denominator is √2^(2k)."""
    pl = u.planes.tolist()
    c = [[(pl[0][i][j], pl[1][i][j], pl[2][i][j], pl[3][i][j]) for j in range(4)] for i in range(4)]
    out = []
    for p, q in _PAIRS:
        cp, cq = c[p], c[q]
        row = []
        for i, j in _PAIRS:
            a = mul4(cp[i], cq[j])
            b = mul4(cq[i], cp[j])
            row.append((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))
        out.append(row)
    return out


def _basis_terms() -> tuple:
    # Coordinate n of ω^s·x is sign·x[src]; precompute, per output entry and
    # coordinate, the signed picks from the Λ² entries.
    terms = []
    for bj in _BASIS:
        row = []
        for bk in _BASIS:
            coords: list[list] = [[], [], [], []]
            for a, pa in bj.items():
                for b, pb in bk.items():
                    for src in range(4):
                        e = [0, 0, 0, 0]
                        e[src] = 1
                        t = omega_power4(tuple(e), pb - pa)
                        for n in range(4):
                            if t[n]:
                                coords[n].append((a, b, src, t[n]))
            row.append(tuple(tuple(cs) for cs in coords))
        terms.append(tuple(row))
    return tuple(terms)


_BASIS_TERMS = _basis_terms()


def _basis_change(lam: list[list[tuple]]) -> list[list[tuple]]:
    """B† Λ B without the 1/2 normalization."""
    return [
        [
            tuple(sum(lam[a][b][src] if sg > 0 else -lam[a][b][src] for a, b, src, sg in cs) for cs in entry)
            for entry in row
        ]
        for row in _BASIS_TERMS
    ]


def su4_to_so6(u: U4Matrix, canonical: bool = True) -> SO6Matrix:
    """SO(6) image of a Clifford+CS operator given up to an ω-power phase.

    The bivector action W of u is computed exactly; since det(u) may differ
    from 1 by a phase, the unique pair ±ω^j making ω^j·W real-integral is
    selected.  With ``canonical`` the sign is fixed so that the first nonzero
    entry is positive; otherwise the smallest such j is used, which for
    determinant-one input is exactly the bivector action itself.
    """
    if not u.is_unitary():
        raise NotInGroup("input matrix is not unitary")
    w = _basis_change(wedge_square(u))
    k = 2 * u.k + 2
    v = min(sqrt2_valuation(x, k) for r in w for x in r)
    if v:
        w = [[div_sqrt2_power(x, v) for x in r] for r in w]
        k -= v
    pivot = next(x for r in w for x in r if any(x))
    for j in range(8):
        if any(omega_power4(pivot, j)[1:]):
            continue
        rotated = [[omega_power4(x, j) for x in r] for r in w]
        if all(x[1] == 0 and x[2] == 0 and x[3] == 0 for r in rotated for x in r):
            m = SO6Matrix(tuple(tuple(x[0] for x in r) for r in rotated), k)
            break
    else:
        raise NotInGroup("no ω-power phase makes the SO(6) image real")
    if m.k != k or not m.is_orthogonal():
        raise NotInGroup("SO(6) image is not an orthogonal matrix over Z[1/√2]")
    return m.sign_canonical() if canonical else m


def lde(m: SO6Matrix) -> int:
    return m.k


def residue(m: SO6Matrix, ell: int) -> tuple[tuple[int, ...], ...]:
    """Entrywise parity of √2^ell·m.

    ell must be a denominator exponent of m, i.e. ell ≥ lde(m) with
    ell - lde(m) even (odd differences leave irrational entries).
    """
    if ell < m.k:
        raise InsufficientExponent(f"{ell} is below the least denominator exponent {m.k}")
    if (ell - m.k) % 2:
        raise InsufficientExponent(f"√2^{ell}·m is not an integer matrix (lde {m.k})")
    if ell > m.k:
        return tuple((0,) * 6 for _ in range(6))
    return tuple(tuple(x & 1 for x in r) for r in m.rows)


# ------------------------------------------------------------------- patterns


@dataclass(frozen=True)
class Pattern:
    """A partition of {1, ..., 6}."""

    blocks: frozenset[frozenset[int]]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> Pattern:
        blocks = [list(b) for b in blocks]
        bs = frozenset(frozenset(b) for b in blocks)
        if sorted(x for b in bs for x in b) != [1, 2, 3, 4, 5, 6]:
            raise ValueError(f"not a partition of 1..6: {blocks!r}")
        return cls(bs)

    @classmethod
    def parse(cls, text: str) -> Pattern:
        """Parse ``"14|2356"`` or ``"{{1,4},{2,3,5,6}}"``."""
        if not text.strip().startswith("{"):
            return cls.of([int(c) for c in part] for part in text.split("|"))
        inner = text.strip().removeprefix("{").removesuffix("}")
        parts = [p.strip("{} ,") for p in inner.split("}")]
        return cls.of([int(x) for x in p.split(",") if x.strip()] for p in parts if p)

    @classmethod
    def from_key(cls, key: Sequence[int]) -> Pattern:
        groups: dict[int, list[int]] = {}
        for i, g in enumerate(key):
            groups.setdefault(g, []).append(i + 1)
        return cls.of(groups.values())

    @property
    def key(self) -> tuple[int, ...]:
        """For each row index (0-based), the smallest row index in its block."""
        out = [0] * 6
        for b in self.blocks:
            lo = min(b) - 1
            for x in b:
                out[x - 1] = lo
        return tuple(out)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.blocks)))

    def sorted_blocks(self) -> list[list[int]]:
        return sorted((sorted(b) for b in self.blocks), key=lambda b: (len(b), b))

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.sorted_blocks()) + "}"

    def __contains__(self, block) -> bool:
        return frozenset(block) in self.blocks


def row_key(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Pattern key of a binary matrix: rows grouped by equality."""
    seen: dict[tuple, int] = {}
    return tuple(seen.setdefault(tuple(r), i) for i, r in enumerate(rows))


def pattern_of(m: SO6Matrix) -> Pattern:
    return Pattern.from_key(row_key(residue(m, m.k)))


def finer(p: Pattern, q: Pattern) -> bool:
    """True iff every block of p lies inside a block of q."""
    return all(any(b <= c for c in q.blocks) for b in p.blocks)


# ------------------------------------------------------------ constant images

_lock = threading.Lock()


@lru_cache(maxsize=1)
def _generator_images() -> tuple[SO6Matrix, ...]:
    from .gates import GENERATORS

    with _lock:
        stored = tuple(SO6Matrix(rows, 1) for rows in _tables.GENERATOR_IMAGES)
        for g, img in zip(GENERATORS, stored):
            got = su4_to_so6(g.matrix())
            if got != img:
                raise AssertionError(f"image of {g.name} does not match the stored table")
        return stored


def generator_images() -> tuple[SO6Matrix, ...]:
    """SO(6) images of G1..G15 (index 0 holds G1)."""
    return _generator_images()


def generator_image(index: int) -> SO6Matrix:
    return _generator_images()[index - 1]


@lru_cache(maxsize=1)
def _clifford_images() -> dict[str, SO6Matrix]:
    from .gates import adjusted_clifford_gate

    with _lock:
        stored = {name: SO6Matrix(rows) for name, rows in _tables.CLIFFORD_IMAGES.items()}
        for name, img in stored.items():
            got = su4_to_so6(adjusted_clifford_gate(name), canonical=False)
            if got != img:
                raise AssertionError(f"image of adjusted {name} does not match the stored table")
        return stored


def clifford_generator_images() -> dict[str, SO6Matrix]:
    """Images of ω†S⊗I, I⊗ω†S, iH⊗I, I⊗iH and ω†CZ keyed by S1, S2, H1, H2, CZ."""
    return dict(_clifford_images())


def is_clifford(u: U4Matrix) -> bool:
    return su4_to_so6(u).k == 0
