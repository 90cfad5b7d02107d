"""Finite automata describing the language of normal forms.

Words are over G1..G15 and a single collapsed Clifford letter CLIFF.  The
full language is recognized by S(1,3)∘S(4,9)∘S(10,15)∘C.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BadRange, NotNormalForm
from .so6 import generator_images, pattern_of

CLIFF = "CLIFF"
GEN_LETTERS = tuple(f"G{j}" for j in range(1, 16))
ALPHABET = GEN_LETTERS + (CLIFF,)

CLIFFORD, P222, P24_CROSS, P24_NONCROSS = "CLIFFORD", "P222", "P24_CROSS", "P24_NONCROSS"


@dataclass(frozen=True)
class NFA:
    """(states, alphabet, initial, final, delta); ``None`` labels ε-edges."""

    states: tuple
    initial: frozenset
    final: frozenset
    delta: dict  # (state, letter | None) -> frozenset of states
    labels: dict | None = None

    def step(self, s, letter) -> frozenset:
        return self.delta.get((s, letter), frozenset())

    def closure(self, states: Iterable) -> frozenset:
        out = set(states)
        todo = list(out)
        while todo:
            s = todo.pop()
            for t in self.step(s, None):
                if t not in out:
                    out.add(t)
                    todo.append(t)
        return frozenset(out)

    def advance(self, current: frozenset, letter: str) -> frozenset:
        return self.closure(t for s in current for t in self.step(s, letter))

    def start(self) -> frozenset:
        return self.closure(self.initial)

    def edges(self) -> list[tuple]:
        return sorted((s, a, t) for (s, a), ts in self.delta.items() for t in ts
                      if a is not None)


def build_C() -> NFA:
    return NFA((0, 1), frozenset({0}), frozenset({1}), {(0, CLIFF): frozenset({1})},
               {0: "0'", 1: "1'"})


@lru_cache(maxsize=1)
def generator_patterns() -> tuple[frozenset, ...]:
    return tuple(pattern_of(g).blocks for g in generator_images())


def disjoint_patterns(s: int, t: int) -> bool:
    pats = generator_patterns()
    return not (pats[s - 1] & pats[t - 1])


def build_S(n: int, m: int) -> NFA:
    if not (1 <= n <= m <= 15):
        raise BadRange(f"need 1 ≤ n ≤ m ≤ 15, got n={n}, m={m}")
    states = tuple(range(1, m + 1))
    delta = {}
    for s in states:
        ts = frozenset(t for t in states if disjoint_patterns(s, t))
        if ts:
            delta[(s, f"G{s}")] = ts
    return NFA(states, frozenset(range(n, m + 1)), frozenset(states), delta,
               {s: str(s) for s in states})


def concatenate(a: NFA, b: NFA) -> NFA:
    """A∘B on the disjoint union of states, with ε-edges from A's final to B's initial states."""
    ia = {s: i for i, s in enumerate(a.states)}
    ib = {s: len(ia) + i for i, s in enumerate(b.states)}
    delta: dict = {}
    for (s, x), ts in a.delta.items():
        delta[(ia[s], x)] = frozenset(ia[t] for t in ts)
    for s in a.final:
        key = (ia[s], None)
        delta[key] = delta.get(key, frozenset()) | frozenset(ib[t] for t in b.initial)
    for (s, x), ts in b.delta.items():
        delta[(ib[s], x)] = frozenset(ib[t] for t in ts)
    labels = {}
    for s, i in ia.items():
        labels[i] = (a.labels or {}).get(s, str(s))
    for s, i in ib.items():
        labels[i] = (b.labels or {}).get(s, str(s)) + "'"
    return NFA(tuple(range(len(ia) + len(ib))),
               frozenset(ia[s] for s in a.initial),
               frozenset(ib[s] for s in b.final), delta, labels)


def concat_all(*parts: NFA) -> NFA:
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = concatenate(p, out)
    return out


def _letters(word: str | Sequence[str]) -> tuple[str, ...]:
    return tuple(word.split()) if isinstance(word, str) else tuple(word)


def accepts(a: NFA, word: str | Sequence[str]) -> bool:
    cur = a.start()
    for x in _letters(word):
        cur = a.advance(cur, x)
        if not cur:
            return False
    return bool(cur & a.final)


@lru_cache(maxsize=1)
def normal_form_automaton() -> NFA:
    return concat_all(build_S(1, 3), build_S(4, 9), build_S(10, 15), build_C())


@lru_cache(maxsize=1)
def _clifford_prefix_automata() -> tuple[NFA, NFA]:
    l1 = concat_all(build_S(1, 15), build_C())
    l2 = concat_all(build_S(1, 9), build_S(10, 15), build_C())
    return l1, l2


# -------------------------------------------------------------- subset DFA


@dataclass(frozen=True, eq=False)  # hashed by identity so results can be cached
class _SubsetDFA:
    start: int
    sets: tuple[frozenset, ...]
    moves: tuple[dict, ...]     # per DFA state: letter -> DFA state
    cliff_ok: tuple[bool, ...]  # reading CLIFF reaches a final state


def _subset_dfa(a: NFA) -> _SubsetDFA:
    hit = a.__dict__.get("_dfa")
    if hit is not None:
        return hit
    index = {a.start(): 0}
    sets = [a.start()]
    moves: list[dict] = []
    i = 0
    while i < len(sets):
        cur, mv = sets[i], {}
        for x in GEN_LETTERS:
            nxt = a.advance(cur, x)
            if nxt:
                if nxt not in index:
                    index[nxt] = len(sets)
                    sets.append(nxt)
                mv[x] = index[nxt]
        moves.append(mv)
        i += 1
    cliff = tuple(bool(a.advance(s, CLIFF) & a.final) for s in sets)
    dfa = _SubsetDFA(0, tuple(sets), tuple(moves), cliff)
    object.__setattr__(a, "_dfa", dfa)  # NFAs are immutable, so the cache stays valid
    return dfa


def count_words(a: NFA, syllable_count: int) -> int:
    """Accepted words made of ``syllable_count`` generator letters then CLIFF."""
    dfa = _subset_dfa(a)
    counts = {dfa.start: 1}
    for _ in range(syllable_count):
        nxt: dict[int, int] = {}
        for d, c in counts.items():
            for e in dfa.moves[d].values():
                nxt[e] = nxt.get(e, 0) + c
        counts = nxt
    return sum(c for d, c in counts.items() if dfa.cliff_ok[d])


@lru_cache(maxsize=256)
def _feasible(dfa: _SubsetDFA, r: int) -> frozenset:
    """DFA states from which r more generator letters then CLIFF can be accepted."""
    cur = frozenset(d for d, ok in enumerate(dfa.cliff_ok) if ok)
    for _ in range(r):
        nxt = frozenset(d for d, mv in enumerate(dfa.moves) if any(e in cur for e in mv.values()))
        if nxt == cur:
            break
        cur = nxt
    return cur


def sample_word(a: NFA, syllable_count: int, rng: random.Random) -> tuple[str, ...]:
    """Random accepted word with the given number of generator letters.

    Each letter is drawn uniformly among those that still admit a completion.
    """
    dfa = _subset_dfa(a)
    feas = [_feasible(dfa, r) for r in range(min(syllable_count, 64) + 1)]

    def ok(r: int) -> frozenset:
        return feas[min(r, len(feas) - 1)]

    if dfa.start not in ok(syllable_count):
        raise NotNormalForm(f"no accepted word with {syllable_count} syllables")
    d, out = dfa.start, []
    for left in range(syllable_count - 1, -1, -1):
        good = ok(left)
        choices = sorted((x for x, e in dfa.moves[d].items() if e in good), key=GEN_LETTERS.index)
        x = choices[rng.randrange(len(choices))]
        out.append(x)
        d = dfa.moves[d][x]
    return tuple(out) + (CLIFF,)


def sample_syllables(syllable_count: int, rng: random.Random) -> list[int]:
    word = sample_word(normal_form_automaton(), syllable_count, rng)
    return [int(x[1:]) for x in word[:-1]]


def accepts_fast(a: NFA, word: Sequence[str]) -> bool:
    """accepts() through the cached subset DFA."""
    dfa = _subset_dfa(a)
    d = dfa.start
    letters = _letters(word)
    if not letters or letters[-1] != CLIFF:
        return accepts(a, letters)
    for x in letters[:-1]:
        d = dfa.moves[d].get(x)
        if d is None:
            return False
    return dfa.cliff_ok[d]


def classify_pattern_language(word: str | Sequence[str]) -> str:
    letters = _letters(word)
    if not accepts_fast(normal_form_automaton(), letters):
        raise NotNormalForm(f"{' '.join(letters)!r} is not a normal form")
    if len(letters) == 1:
        return CLIFFORD
    l1, l2 = _clifford_prefix_automata()
    if accepts_fast(l1, letters):
        return P222
    if accepts_fast(l2, letters):
        return P24_CROSS
    return P24_NONCROSS


def geometric_class(pattern) -> str:
    """Class of an SO(6) pattern, matching classify_pattern_language."""
    shape = pattern.shape
    if shape == (1, 1, 1, 1, 1, 1):
        return CLIFFORD
    if shape == (2, 2, 2):
        return P222
    if shape == (2, 4):
        pair = next(b for b in pattern.blocks if len(b) == 2)
        lo, hi = sorted(pair)
        return P24_CROSS if lo <= 3 < hi else P24_NONCROSS
    raise ValueError(f"unexpected pattern shape {shape}")
