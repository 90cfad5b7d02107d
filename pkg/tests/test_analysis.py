from __future__ import annotations

import mpmath
import pytest

from cliffcs.analysis import (
    CLIFFORD_ORDER,
    adversarial_operator,
    asymptotic_constant,
    count_exact,
    count_report,
    count_upto,
    det_one_phase,
    epsilon_lower_bound,
    in_sandwich,
    lde_vs_cscount,
    su4_lde,
)
from cliffcs.errors import BadEpsilon, BadInput, NotInGroup
from cliffcs.gates import clifford_gate
from cliffcs.so6 import generator_images
from cliffcs.synthesis import random_operator, signed_perm_table
from cliffcs.u4 import U4Matrix


def test_count_values():
    assert count_exact(1) == 1382400
    assert count_exact(2) == 13824000
    assert count_upto(0) == CLIFFORD_ORDER == 92160
    assert count_upto(1) == 1474560
    assert count_upto(2) == 15298560


def test_count_telescopes():
    for n in range(1, 40):
        assert count_upto(n) == count_upto(n - 1) + count_exact(n)


def test_count_errors():
    with pytest.raises(BadInput):
        count_exact(0)
    with pytest.raises(BadInput):
        count_upto(-1)
    r = count_report(0)
    assert r.exact_count == r.cumulative_count == 92160


def test_brute_force_cs_count_one():
    # distinct sign classes of Ḡ_j·C over signed permutations C, times the 8 phases
    gens = [tuple(zip(*g.rows)) for g in generator_images()]
    seen = set()
    for cols in gens:
        for s in signed_perm_table().words:
            prod = tuple(cols[abs(x) - 1] if x > 0 else tuple(-v for v in cols[abs(x) - 1]) for x in s)
            flat = tuple(v for c in prod for v in c)
            first = next(v for v in flat if v)
            seen.add(flat if first > 0 else tuple(-v for v in flat))
    assert 8 * len(seen) == count_exact(1)


@pytest.mark.parametrize("eps, expected", [(2**-10, 49.33), (2**-20, 99.33)])
def test_headline_examples(eps, expected):
    r = epsilon_lower_bound(eps)
    assert abs(float(r.headline) - expected) < 1e-9
    assert abs(float(r.volume_root) - expected) < 0.01


@pytest.mark.parametrize(
    "eps, root, n",
    [("1e-2", 32.550151262, 33), ("1e-4", 65.7694322108, 66), ("1e-6", 98.9887131597, 99)],
)
def test_volume_bound_values(eps, root, n):
    r = epsilon_lower_bound(eps)
    assert abs(float(r.volume_root) - root) < 1e-8
    assert r.volume_integer == n


def test_volume_root_matches_asymptotics():
    # for small ε the 4^n terms vanish and the root is 5·log2(1/ε) + c
    c = asymptotic_constant()
    assert abs(float(c) + 0.669129686960974) < 1e-12
    with mpmath.workdps(40):
        eps = mpmath.mpf(10) ** -30
        r = epsilon_lower_bound(eps)
        assert abs(r.volume_root - (5 * mpmath.log(1 / eps, 2) + c)) < mpmath.mpf(10) ** -20


def test_bound_monotone():
    vals = [epsilon_lower_bound(10.0**-k).volume_root for k in range(1, 12)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("eps", [0, 1, -0.5, 2])
def test_bad_epsilon(eps):
    with pytest.raises(BadEpsilon):
        epsilon_lower_bound(eps)


def test_su4_lde_examples():
    assert su4_lde(U4Matrix.identity()) == 0
    # ω·CZ has entries ±ω and √2·ω = 1 + i
    cz = det_one_phase(clifford_gate("CZ"))
    assert cz is not None and su4_lde(cz) == 1
    h = det_one_phase(clifford_gate("H1"))
    assert h is not None and su4_lde(h) == 1
    with pytest.raises(NotInGroup):
        su4_lde(clifford_gate("S1"))


def test_det_one_phase_needs_even_cs_count():
    assert det_one_phase(clifford_gate("CS")) is None
    u, _ = random_operator(2, 0)
    assert det_one_phase(u) is not None


def test_sandwich_predicate():
    assert in_sandwich(4, 4)
    assert in_sandwich(102, 200)
    assert not in_sandwich(10, 23)
    assert not in_sandwich(20, 8)


def test_sandwich_on_random_operators():
    ops = [random_operator(2 * n, n)[0] for n in range(12)]
    rep = lde_vs_cscount(ops)
    assert rep.skipped == 0 and not rep.violations
    assert [kp for _, kp in rep.pairs] == [2 * n for n in range(12)]


def test_adversarial_family():
    rep = lde_vs_cscount([adversarial_operator(m) for m in (1, 5, 10)])
    assert rep.pairs == [(4, 4), (12, 20), (22, 40)]
    assert not rep.violations
    assert rep.max_ratio > 1.8
