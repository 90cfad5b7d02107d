from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from cliffcs import _tables
from cliffcs.errors import KeyMissing, NoFinerGenerator, NotInGroup
from cliffcs.gates import CLIFFORD_TOKENS, GateWord, clifford_gate, evaluate_word
from cliffcs.so6 import Pattern, SO6Matrix, finer, generator_image, pattern_of, su4_to_so6
from cliffcs.synthesis import (
    NormalForm,
    all_reduction_patterns,
    clifford_words,
    coset_level_sizes,
    ffp_select,
    ffp_table,
    lift_clifford,
    optimality_oracle,
    random_operator,
    reduce_step,
    signed_perm_table,
    synthesize,
    synthesize_with_stats,
)
from cliffcs.u4 import U4Matrix


@pytest.mark.parametrize("pattern, index", [("14|2356", 1), ("16|24|35", 15), ("12|3456", 3)])
def test_ffp_examples(pattern, index):
    assert ffp_select(Pattern.parse(pattern)) == index


def test_ffp_table_covers_all_patterns_with_finer_generators():
    table = ffp_table()
    assert len(table) == 30 == len(all_reduction_patterns())
    for p, j in table.items():
        assert finer(pattern_of(generator_image(j)), p)


def test_ffp_rejects_other_shapes():
    with pytest.raises(NoFinerGenerator):
        ffp_select(Pattern.parse("123456"))


@pytest.mark.parametrize("j", range(1, 16))
def test_reduce_step_on_generator(j):
    got, rest = reduce_step(generator_image(j))
    assert got == j and rest == SO6Matrix.identity()


def test_reduce_step_needs_positive_lde():
    with pytest.raises(NotInGroup):
        reduce_step(SO6Matrix.identity())


def test_synthesize_cs():
    nf = synthesize(clifford_gate("CS"))
    assert nf.syllables == (3,) and nf.tail == () and nf.phase == 0


@pytest.mark.parametrize("word", ["", "H1", "CZ H2 S1", "S1 S1 S1 S1 H1 H1"])
def test_synthesize_clifford(word):
    u = evaluate_word(word)
    nf = synthesize(u)
    assert nf.cs_count == 0
    assert nf.evaluate() == u


def test_worked_example_has_cs_count_six():
    u = U4Matrix.from_entries([[complex(*e) for e in r] for r in _tables.WORKED_EXAMPLE_INPUT], k=4)
    nf = synthesize(u)
    assert nf.cs_count == 6
    assert nf.evaluate() == u


def test_signed_perm_table():
    t = signed_perm_table()
    assert len(t) == 23040 and t.depth == 15
    assert len(t.projective()) == 11520
    assert len(clifford_words()) == 11520


def test_every_table_word_maps_back():
    rng = random.Random(0)
    words = list(signed_perm_table().words.values())
    for w in rng.sample(words, 300):
        m = su4_to_so6(GateWord(w).evaluate())
        lifted = lift_clifford(m)
        assert su4_to_so6(lifted.evaluate()) == m
        assert len(lifted) <= len(w)


def test_lift_rejects_non_cliffords():
    with pytest.raises(KeyMissing):
        lift_clifford(generator_image(1))


def test_oracle_levels():
    assert coset_level_sizes(3) == (1, 15, 150, 1320)
    with pytest.raises(ValueError):
        optimality_oracle(U4Matrix.identity(), max_depth=5)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_oracle_agrees(n):
    for seed in range(10):
        u, nf = random_operator(n, seed)
        assert optimality_oracle(u) == n == synthesize(u).cs_count


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 60), st.integers(0, 10**9))
def test_random_roundtrip(n, seed):
    u, nf = random_operator(n, seed)
    got = synthesize(u)
    assert got == nf
    assert got.evaluate() == u
    assert GateWord(got.gate_tokens()).evaluate() == u
    assert GateWord(got.gate_tokens()).cs_count == n


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from(CLIFFORD_TOKENS + ("CS",)), max_size=30))
def test_arbitrary_words(word):
    u = evaluate_word(word)
    nf = synthesize(u)
    assert nf.evaluate() == u
    assert nf.cs_count <= word.count("CS")


def test_determinism_and_phase_insensitivity():
    u, _ = random_operator(12, 3)
    a, b = synthesize(u), synthesize(u)
    assert a == b
    for j in range(8):
        c = synthesize(u.times_omega(j))
        assert c.syllables == a.syllables and c.tail == a.tail
        assert c.phase == (a.phase + j) % 8


def test_ring_ops_linear():
    _, s1 = synthesize_with_stats(random_operator(200, 1)[0])
    _, s2 = synthesize_with_stats(random_operator(800, 1)[0])
    assert s1.lde == 200 and s2.lde == 800
    assert 3.5 < s2.ring_ops / s1.ring_ops < 4.5


def test_non_group_input():
    u = U4Matrix.from_entries([[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(NotInGroup):
        synthesize(u)


def test_normal_form_rendering():
    nf = NormalForm((3, 1), ("H1",), 2)
    assert nf.tokens() == ("G3", "G1", "H1", "W^2")
    assert nf.symbolic() == ("G3", "G1", "CLIFF")
    assert nf.word().evaluate() == nf.evaluate()
