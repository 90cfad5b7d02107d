"""The two-qubit Pauli group, tracked exactly as i^phase·(left ⊗ right)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .u4 import U4Matrix, kron2

LETTERS = "IXYZ"

# 2×2 matrices as Gaussian-integer coordinate tuples (re, 0, im, 0).
_ONE, _NEG, _I, _NEG_I, _ZERO = (1, 0, 0, 0), (-1, 0, 0, 0), (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 0)
_SINGLE = {
    0: [[_ONE, _ZERO], [_ZERO, _ONE]],
    1: [[_ZERO, _ONE], [_ONE, _ZERO]],
    2: [[_ZERO, _NEG_I], [_I, _ZERO]],
    3: [[_ONE, _ZERO], [_ZERO, _NEG]],
}


def _single_mul(a: int, b: int) -> tuple[int, int]:
    """σ_a·σ_b = i^phase·σ_c, returned as (phase, c)."""
    if a == 0:
        return 0, b
    if b == 0:
        return 0, a
    if a == b:
        return 0, 0
    c = 6 - a - b
    return (1 if (b - a) % 3 == 1 else 3), c


@dataclass(frozen=True, order=True)
class Pauli2:
    phase: int
    left: int
    right: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", self.phase % 4)
        if not (0 <= self.left < 4 and 0 <= self.right < 4):
            raise ValueError("Pauli letters are indices into 'IXYZ'")

    @classmethod
    def parse(cls, text: str) -> Pauli2:
        """Parse strings such as ``"XI"``, ``"-Z⊗Y"``, ``"iXX"`` or ``"-iYZ"``."""
        s = text.replace("⊗", "").replace("*", "").replace(" ", "")
        m = re.fullmatch(r"([+-]?)(i?)([IXYZ])([IXYZ])", s)
        if not m:
            raise ValueError(f"cannot parse Pauli {text!r}")
        phase = (2 if m.group(1) == "-" else 0) + (1 if m.group(2) else 0)
        return cls(phase, LETTERS.index(m.group(3)), LETTERS.index(m.group(4)))

    def __str__(self) -> str:
        prefix = ["", "i", "-", "-i"][self.phase]
        return f"{prefix}{LETTERS[self.left]}⊗{LETTERS[self.right]}"

    def __mul__(self, other: Pauli2) -> Pauli2:
        pa, a = _single_mul(self.left, other.left)
        pb, b = _single_mul(self.right, other.right)
        return Pauli2(self.phase + other.phase + pa + pb, a, b)

    def __neg__(self) -> Pauli2:
        return Pauli2(self.phase + 2, self.left, self.right)

    def times_i(self, n: int = 1) -> Pauli2:
        return Pauli2(self.phase + n, self.left, self.right)

    @property
    def is_identity(self) -> bool:
        return self.phase == 0 and self.left == 0 and self.right == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    def matrix(self) -> U4Matrix:
        return _pauli_matrix(self)


@lru_cache(maxsize=None)
def _pauli_matrix(p: Pauli2) -> U4Matrix:
    rows = kron2(_SINGLE[p.left], _SINGLE[p.right])
    return U4Matrix.from_entries(rows).times_omega(2 * p.phase)


def pauli_mul(p: Pauli2, q: Pauli2) -> Pauli2:
    return p * q


def commutes(p: Pauli2, q: Pauli2) -> bool:
    # Each tensor factor with distinct non-identity letters anticommutes.
    anti = sum(1 for x, y in ((p.left, q.left), (p.right, q.right)) if x and y and x != y)
    return anti % 2 == 0


def all_paulis() -> list[Pauli2]:
    return [Pauli2(ph, a, b) for ph in range(4) for a in range(4) for b in range(4)]


def hermitian_nonidentity() -> list[Pauli2]:
    """±(P⊗Q) for (P, Q) ≠ (I, I), together with -I."""
    out = [Pauli2(ph, a, b) for ph in (0, 2) for a in range(4) for b in range(4)]
    return [p for p in out if not p.is_identity]


def identify(m: U4Matrix) -> Pauli2 | None:
    """Return the Pauli2 whose matrix is exactly ``m``, if any."""
    return _matrix_lookup().get(m)


@lru_cache(maxsize=1)
def _matrix_lookup() -> dict[U4Matrix, Pauli2]:
    return {p.matrix(): p for p in all_paulis()}
