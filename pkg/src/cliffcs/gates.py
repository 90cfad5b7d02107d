"""Clifford and CS gate matrices, the R(P, Q) generators and gate words.

Gate-word grammar (whitespace separated tokens):

    H1 H2 S1 S2 CZ CS   elementary gates (1 = first tensor factor)
    W                   global phase ω
    W^j                 global phase ω^j
    G1 .. G15           the fifteen R(P, Q) syllables

Words evaluate left to right as a matrix product, so ``"H1 CS"`` is the
matrix (H⊗I)·CS.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PreconditionViolated, UnknownToken
from .paulis import Pauli2, commutes
from .u4 import U4Matrix, kron2, product

CLIFFORD_TOKENS = ("H1", "H2", "S1", "S2", "CZ")
GATE_TOKENS = CLIFFORD_TOKENS + ("CS",)

_1, _0, _I = (1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 1, 0)
_H = [[_1, _1], [_1, (-1, 0, 0, 0)]]
_S = [[_1, _0], [_0, _I]]
_ID2 = [[_1, _0], [_0, _1]]


@lru_cache(maxsize=None)
def clifford_gate(name: str) -> U4Matrix:
    """Exact matrix of an elementary gate token (no phase adjustment)."""
    if name == "H1":
        return U4Matrix.from_entries(kron2(_H, _ID2), k=1)
    if name == "H2":
        return U4Matrix.from_entries(kron2(_ID2, _H), k=1)
    if name == "S1":
        return U4Matrix.from_entries(kron2(_S, _ID2))
    if name == "S2":
        return U4Matrix.from_entries(kron2(_ID2, _S))
    if name == "CZ":
        return U4Matrix.from_entries(_diag([_1, _1, _1, (-1, 0, 0, 0)]))
    if name == "CS":
        return U4Matrix.from_entries(_diag([_1, _1, _1, _I]))
    if name == "W":
        return U4Matrix.scalar_omega(1)
    m = re.fullmatch(r"W\^(-?\d+)", name)
    if m:
        return U4Matrix.scalar_omega(int(m.group(1)))
    m = re.fullmatch(r"G(\d+)", name)
    if m and 1 <= int(m.group(1)) <= 15:
        return generator_matrix(int(m.group(1)))
    raise UnknownToken(f"unknown gate token {name!r}")


def _diag(d: Sequence) -> list[list]:
    return [[d[i] if i == j else _0 for j in range(4)] for i in range(4)]


# Phase-adjusted Clifford generators of determinant one: ω†S, iH and ω†CZ.
PHASE_ADJUST = {"S1": 7, "S2": 7, "H1": 2, "H2": 2, "CZ": 7}


def adjusted_clifford_gate(name: str) -> U4Matrix:
    return clifford_gate(name).times_omega(PHASE_ADJUST[name])


def r_gate_matrix(p: Pauli2, q: Pauli2) -> U4Matrix:
    """R(P, Q) = I + (i - 1)·((I - P)/2)·((I - Q)/2)."""
    if not (p.is_hermitian and q.is_hermitian):
        raise PreconditionViolated(f"R({p}, {q}): both Paulis must be Hermitian")
    if p.is_identity or q.is_identity:
        raise PreconditionViolated(f"R({p}, {q}): identity is not allowed")
    if p == q:
        raise PreconditionViolated(f"R({p}, {q}): Paulis must be distinct")
    if not commutes(p, q):
        raise PreconditionViolated(f"R({p}, {q}): Paulis must commute")
    return _r_matrix(p, q)


@lru_cache(maxsize=None)
def _r_matrix(p: Pauli2, q: Pauli2) -> U4Matrix:
    ident = U4Matrix.identity()
    pm, qm = p.matrix(), q.matrix()
    # 4·((I-P)/2)((I-Q)/2) = I - P - Q + PQ, all over Z[i].
    n = ident.planes - pm.planes - qm.planes + (pm @ qm).planes
    i_minus_1 = U4Matrix.identity().times_omega(2).planes - ident.planes
    scaled = (U4Matrix(i_minus_1, 0, canonical=True) @ U4Matrix(n, 0, canonical=True)).planes
    # I + (i-1)N/4 = (4I + (i-1)N)/√2^4
    return U4Matrix(4 * ident.planes + scaled, 4)


@dataclass(frozen=True)
class RGen:
    index: int
    p: Pauli2
    q: Pauli2

    @property
    def name(self) -> str:
        return f"G{self.index}"

    def __str__(self) -> str:
        return f"R({self.p}, {self.q})"

    def matrix(self) -> U4Matrix:
        return r_gate_matrix(self.p, self.q)


def _g(index: int, p: str, q: str) -> RGen:
    return RGen(index, Pauli2.parse(p), Pauli2.parse(q))


# Read left-to-right, row-by-row.  G11 and G13 carry the sign that makes
# their SO(6) images equal the stored image table (see so6.GENERATOR_IMAGES);
# the unsigned pairs are R(X⊗X, Z⊗Y) and R(Y⊗X, X⊗Y).
GENERATORS: tuple[RGen, ...] = (
    _g(1, "XI", "IX"),
    _g(2, "YI", "IY"),
    _g(3, "ZI", "IZ"),
    _g(4, "YI", "IZ"),
    _g(5, "ZI", "IY"),
    _g(6, "ZI", "IX"),
    _g(7, "XI", "IZ"),
    _g(8, "XI", "IY"),
    _g(9, "YI", "IX"),
    _g(10, "XX", "YY"),
    _g(11, "-XX", "ZY"),
    _g(12, "ZX", "YY"),
    _g(13, "YX", "-XY"),
    _g(14, "ZX", "XY"),
    _g(15, "YX", "ZY"),
)


def generator(index: int) -> RGen:
    if not 1 <= index <= 15:
        raise UnknownToken(f"no generator G{index}")
    return GENERATORS[index - 1]


def generator_matrix(index: int) -> U4Matrix:
    return generator(index).matrix()


@dataclass(frozen=True)
class GateWord:
    tokens: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> GateWord:
        tokens = tuple(text.split())
        for t in tokens:
            clifford_gate(t)  # validates
        return cls(tokens)

    def __str__(self) -> str:
        return " ".join(self.tokens)

    def __add__(self, other: GateWord) -> GateWord:
        return GateWord(self.tokens + other.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def evaluate(self) -> U4Matrix:
        return evaluate_word(self.tokens)

    @property
    def cs_count(self) -> int:
        return sum(t == "CS" or t.startswith("G") for t in self.tokens)


def evaluate_word(word: GateWord | str | Iterable[str]) -> U4Matrix:
    if isinstance(word, GateWord):
        tokens = word.tokens
    elif isinstance(word, str):
        tokens = tuple(word.split())
    else:
        tokens = tuple(word)
    phase = 0
    mats = []
    for t in tokens:
        if t == "W":
            phase += 1
        elif t.startswith("W^"):
            phase += _w_exponent(t)
        else:
            mats.append(clifford_gate(t))
    return product(mats).times_omega(phase)


def _w_exponent(token: str) -> int:
    m = re.fullmatch(r"W\^(-?\d+)", token)
    if not m:
        raise UnknownToken(f"unknown gate token {token!r}")
    return int(m.group(1))
