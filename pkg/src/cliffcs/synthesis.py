"""Optimal synthesis: pattern-driven lde reduction plus Clifford lifting.

The SO(6) image V of an operator is reduced one syllable at a time.  At
each step the rows of the residue of V fall into a 2×2×2 or 2×4 pattern,
the first generator (by index) whose own pattern refines it is selected,
and V is replaced by Ḡᵀ·V, which lowers the lde by exactly one.  What is
left at lde 0 is a signed permutation, lifted back to a Clifford word by
table lookup.
"""

from __future__ import annotations

import random
import threading
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import _tables, kernels
from .errors import KeyMissing, NoFinerGenerator, NotInGroup
from .gates import CLIFFORD_TOKENS, GateWord, clifford_gate, evaluate_word, generator_matrix
from .paulis import Pauli2, identify
from .rings import div_sqrt2, divisible_by_sqrt2, omega_power4
from .so6 import (
    Pattern,
    SO6Matrix,
    clifford_generator_images,
    finer,
    generator_images,
    pattern_of,
    su4_to_so6,
)
from .u4 import U4Matrix, product

_lock = threading.RLock()

# ------------------------------------------------------------------ FFP table


def all_reduction_patterns() -> list[Pattern]:
    """The 15 patterns of shape 2×2×2 and the 15 of shape 2×4."""
    out = []
    elems = range(1, 7)
    seen = set()
    for a in elems:
        for b in elems:
            if a < b:
                rest = [x for x in elems if x not in (a, b)]
                seen.add(Pattern.of([[a, b], rest]))
                for c in rest:
                    for d in rest:
                        if c < d:
                            last = [x for x in rest if x not in (c, d)]
                            seen.add(Pattern.of([[a, b], [c, d], last]))
    out = sorted(seen, key=lambda p: (p.shape, p.key))
    return out


def _transcribed_ffp() -> dict[Pattern, int]:
    return {Pattern.parse(s): j for j, pats in _tables.FFP_TABLE for s in pats}


def _regenerated_ffp() -> dict[Pattern, int]:
    gen_pats = [pattern_of(g) for g in generator_images()]
    out = {}
    for p in all_reduction_patterns():
        js = [j for j, g in enumerate(gen_pats, 1) if finer(g, p)]
        if not js:
            raise NoFinerGenerator(f"no generator pattern refines {p}")
        out[p] = min(js)
    return out


@lru_cache(maxsize=1)
def ffp_table() -> dict[Pattern, int]:
    """Pattern → generator index, checked against the lowest-index rule."""
    with _lock:
        stored, rule = _transcribed_ffp(), _regenerated_ffp()
        if stored != rule:
            diff = {str(p): (stored.get(p), rule.get(p)) for p in set(stored) | set(rule)
                    if stored.get(p) != rule.get(p)}
            raise AssertionError(f"transcribed FFP table disagrees with the rule: {diff}")
        return stored


@lru_cache(maxsize=1)
def _ffp_keys() -> dict[tuple[int, ...], int]:
    return {p.key: j for p, j in ffp_table().items()}


def ffp_select(p: Pattern) -> int:
    try:
        return ffp_table()[p]
    except KeyError:
        raise NoFinerGenerator(f"{p} is neither a 2×2×2 nor a 2×4 pattern") from None


@lru_cache(maxsize=1)
def _gen_ops() -> tuple[tuple[tuple[int, int], ...], ...]:
    """Column structure of each generator image: column i = e_i + s·e_p."""
    out = []
    for g in generator_images():
        cols = []
        for i, col in enumerate(zip(*g.rows)):
            others = [(p, s) for p, s in enumerate(col) if s and p != i]
            if col[i] != 1 or len(others) != 1 or abs(others[0][1]) != 1:
                raise AssertionError("generator image does not have the expected column structure")
            cols.append(others[0])
        out.append(tuple(cols))
    return tuple(out)


def reduce_step(m: SO6Matrix) -> tuple[int, SO6Matrix]:
    if m.k < 1:
        raise NotInGroup("reduce_step needs lde ≥ 1")
    j = ffp_select(pattern_of(m))
    out = generator_images()[j - 1].T @ m
    if out.k != m.k - 1:
        raise NotInGroup(f"reduction by G{j} did not lower the lde by one")
    return j, out


# ----------------------------------------------------------- Clifford lifting

# A signed permutation is stored compactly as a 6-tuple s: column i has its
# nonzero entry in row |s[i]| - 1 with the sign of s[i].


def _compact(m: SO6Matrix) -> tuple[int, ...]:
    if not m.is_signed_permutation():
        raise KeyMissing("not a signed permutation matrix")
    out = []
    for col in zip(*m.rows):
        r = next(i for i, x in enumerate(col) if x)
        out.append((r + 1) * col[r])
    return tuple(out)


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # column i of AB = sign(b_i)·(column |b_i| of A)
    return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)


def _sign_canonical(s: tuple[int, ...]) -> tuple[int, ...]:
    # The first nonzero entry in row-major order sits in row 1.
    for x in s:
        if abs(x) == 1:
            return s if x > 0 else tuple(-y for y in s)
    raise AssertionError("unreachable")


def _expand(s: tuple[int, ...]) -> SO6Matrix:
    rows = [[0] * 6 for _ in range(6)]
    for i, x in enumerate(s):
        rows[abs(x) - 1][i] = 1 if x > 0 else -1
    return SO6Matrix(rows)


@dataclass(frozen=True)
class SignedPermTable:
    words: dict[tuple[int, ...], tuple[str, ...]]
    depth: int

    def __len__(self) -> int:
        return len(self.words)

    def projective(self) -> dict[tuple[int, ...], tuple[str, ...]]:
        """Shortest word per ± class (11520 classes)."""
        out: dict = {}
        for s, w in self.words.items():
            c = _sign_canonical(s)
            if c not in out or (len(w), w) < (len(out[c]), out[c]):
                out[c] = w
        return out


@lru_cache(maxsize=1)
def signed_perm_table() -> SignedPermTable:
    """Breadth-first search from the identity over the five Clifford images.

    Words are shortest; ties go to the lexicographically smallest token
    sequence (first-found under FIFO order with sorted tokens).
    """
    with _lock:
        gens = [(t, _compact(img)) for t, img in sorted(clifford_generator_images().items())]
        start = (1, 2, 3, 4, 5, 6)
        words = {start: ()}
        queue = deque([start])
        depth = 0
        while queue:
            s = queue.popleft()
            w = words[s]
            for t, g in gens:
                n = _compose(s, g)
                if n not in words:
                    words[n] = w + (t,)
                    depth = max(depth, len(w) + 1)
                    queue.append(n)
        return SignedPermTable(words, depth)


@lru_cache(maxsize=1)
def _projective_words() -> dict[tuple[int, ...], tuple[str, ...]]:
    return signed_perm_table().projective()


def lift_clifford(m: SO6Matrix) -> GateWord:
    """A shortest Clifford word whose SO(6) image is ±m."""
    if m.k != 0:
        raise KeyMissing(f"lde {m.k} matrix is not a Clifford image")
    try:
        return GateWord(_projective_words()[_sign_canonical(_compact(m))])
    except KeyError:
        raise KeyMissing("signed permutation missing from the Clifford table") from None


def clifford_words() -> list[tuple[str, ...]]:
    """One word per Clifford operator modulo phase, shortest first."""
    return list(_sorted_clifford_words())


@lru_cache(maxsize=1)
def _sorted_clifford_words() -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(_projective_words().values(), key=lambda w: (len(w), w)))


# ------------------------------------------------------------- normal forms


@dataclass(frozen=True)
class NormalForm:
    syllables: tuple[int, ...]
    tail: tuple[str, ...] = ()
    phase: int = 0

    @property
    def cs_count(self) -> int:
        return len(self.syllables)

    def tokens(self) -> tuple[str, ...]:
        out = tuple(f"G{j}" for j in self.syllables) + self.tail
        return out + ((f"W^{self.phase}",) if self.phase % 8 else ())

    def word(self) -> GateWord:
        return GateWord(self.tokens())

    def symbolic(self) -> tuple[str, ...]:
        return tuple(f"G{j}" for j in self.syllables) + ("CLIFF",)

    def evaluate(self) -> U4Matrix:
        return evaluate_word(self.tokens())

    def gate_tokens(self) -> tuple[str, ...]:
        """The same operator over {H1, H2, S1, S2, CZ, CS} and a phase."""
        out: list[str] = []
        for j in self.syllables:
            c = syllable_conjugator(j)
            out.extend(c)
            out.append("CS")
            out.extend(_inverse_word(c))
        out.extend(self.tail)
        if self.phase % 8:
            out.append(f"W^{self.phase}")
        return tuple(out)

    def __str__(self) -> str:
        return " ".join(self.tokens()) or "I"


_INVERSE = {"H1": ("H1",), "H2": ("H2",), "CZ": ("CZ",), "S1": ("S1",) * 3, "S2": ("S2",) * 3}


def _inverse_word(word: Sequence[str]) -> tuple[str, ...]:
    return tuple(t for g in reversed(word) for t in _INVERSE[g])


@lru_cache(maxsize=None)
def _conjugation(token: str, p: Pauli2) -> Pauli2:
    g = clifford_gate(token)
    q = identify(g @ p.matrix() @ g.adjoint())
    if q is None:
        raise AssertionError(f"{token} does not normalize {p}")
    return q


@lru_cache(maxsize=None)
def syllable_conjugator(j: int) -> tuple[str, ...]:
    """Shortest Clifford word C (lexicographic tie-break) with C·CS·C† = G_j exactly."""
    target = generator_matrix(j)
    start = (Pauli2.parse("ZI"), Pauli2.parse("IZ"))
    seen = {start: ()}
    queue = deque([start])
    from .gates import r_gate_matrix

    while queue:
        pair = queue.popleft()
        w = seen[pair]
        if r_gate_matrix(*pair) == target:
            return w
        # C' = g·C conjugates each Pauli by C first, then by g.
        for t in sorted(CLIFFORD_TOKENS):
            n = (_conjugation(t, pair[0]), _conjugation(t, pair[1]))
            if n not in seen:
                seen[n] = (t,) + w
                queue.append(n)
    raise AssertionError(f"G{j} is not Clifford-conjugate to CS")


# ---------------------------------------------------------------- synthesis


@dataclass
class SynthesisStats:
    ring_ops: int = 0
    lde: int = 0
    backend: str = ""
    extra: dict = field(default_factory=dict)


def synthesize(u: U4Matrix, stats: SynthesisStats | None = None) -> NormalForm:
    """The CS-count-optimal normal form of a Clifford+CS operator.

    Evaluating the result reproduces ``u`` exactly, global phase included.
    """
    v = su4_to_so6(u)
    if stats is not None:
        stats.lde, stats.backend = v.k, kernels.BACKEND
    indices, rows, ops = kernels.reduce_loop(v.rows, v.k, _gen_ops(), _ffp_keys())
    tail = lift_clifford(SO6Matrix(rows)).tokens
    phase, phase_ops = _recover_phase(u, tuple(indices), tail)
    if stats is not None:
        stats.ring_ops += ops + phase_ops
    return NormalForm(tuple(indices), tail, phase)


def synthesize_with_stats(u: U4Matrix) -> tuple[NormalForm, SynthesisStats]:
    st = SynthesisStats()
    return synthesize(u, st), st


@lru_cache(maxsize=None)
def _coord_rows(token: str) -> tuple[tuple[tuple[int, ...], ...], int]:
    m = clifford_gate(token)
    return tuple(tuple(tuple(int(x) for x in m.coords(i, j)) for j in range(4)) for i in range(4)), m.k


def _canonical_vector(v: list, k: int) -> tuple[list, int]:
    while k > 0 and all(divisible_by_sqrt2(x) for x in v):
        v = [div_sqrt2(x) for x in v]
        k -= 1
    return v, k


def _recover_phase(u: U4Matrix, indices: Sequence[int], tail: Sequence[str]) -> tuple[int, int]:
    """The j with ω^j·eval(word) = u, from one column of each side."""
    col = next(c for c in range(4) if any(any(u.coords(r, c)) for r in range(4)))
    start = [(int(i == col), 0, 0, 0) for i in range(4)]
    mats = [_coord_rows(t) for t in tuple(f"G{j}" for j in indices) + tuple(tail)]
    v, k, ops = kernels.apply_column(mats, start, 0)
    target, tk = _canonical_vector([tuple(int(x) for x in u.coords(r, col)) for r in range(4)], u.k)
    if tk == k:
        for j in range(8):
            if [omega_power4(x, j) for x in v] == target:
                return j, ops
    raise NotInGroup("synthesized word does not reproduce the input up to an ω-power")


# ------------------------------------------------------------ optimality oracle


def coset_key(m: SO6Matrix) -> tuple:
    """Invariant of m·C over signed permutations C (and of ±m)."""
    cols = []
    for col in zip(*m.rows):
        first = next(x for x in col if x)
        cols.append(col if first > 0 else tuple(-x for x in col))
    return m.k, tuple(sorted(cols))


@lru_cache(maxsize=None)
def _coset_levels(max_depth: int) -> tuple[dict, tuple[int, ...]]:
    ident = SO6Matrix.identity()
    dist = {coset_key(ident): 0}
    frontier = [ident]
    sizes = [1]
    gens = generator_images()
    for d in range(1, max_depth + 1):
        nxt = []
        for m in frontier:
            for g in gens:
                n = g @ m
                key = coset_key(n)
                if key not in dist:
                    dist[key] = d
                    nxt.append(n)
        frontier = nxt
        sizes.append(len(nxt))
    return dist, tuple(sizes)


def coset_level_sizes(max_depth: int) -> tuple[int, ...]:
    return _coset_levels(max_depth)[1]


def optimality_oracle(u: U4Matrix, max_depth: int = 3) -> int | None:
    """Minimal CS-count by brute-force search, or None if above max_depth."""
    if max_depth > 4:
        raise ValueError("max_depth above 4 is not supported")
    dist, _ = _coset_levels(max_depth)
    return dist.get(coset_key(su4_to_so6(u)))


# ------------------------------------------------------------- random inputs


def random_normal_form(cs_count: int, rng: random.Random) -> NormalForm:
    from .automata import sample_syllables

    syllables = sample_syllables(cs_count, rng)
    tails = _sorted_clifford_words()
    return NormalForm(tuple(syllables), tails[rng.randrange(len(tails))], rng.randrange(8))


def random_operator(cs_count: int, seed: int | None = None) -> tuple[U4Matrix, NormalForm]:
    """A random operator of known optimal CS-count together with its normal form."""
    rng = random.Random(seed)
    nf = random_normal_form(cs_count, rng)
    return nf.evaluate(), nf


def evaluate_syllables(syllables: Iterable[int]) -> U4Matrix:
    return product(generator_matrix(j) for j in syllables)
