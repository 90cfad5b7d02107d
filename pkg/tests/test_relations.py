from __future__ import annotations

import pytest

from cliffcs.errors import HypothesisViolated
from cliffcs.gates import clifford_gate
from cliffcs.paulis import Pauli2
from cliffcs.relations import RELATIONS, check_relation, sweep, valid_pairs, valid_triples

P = Pauli2.parse


def test_valid_pairs_count():
    pairs = list(valid_pairs())
    assert len(pairs) == len(set(pairs))
    assert all(p != q for p, q in pairs)
    assert (P("ZI"), P("IZ")) in pairs and (P("ZI"), P("XI")) not in pairs


@pytest.mark.parametrize("rel", [r for r in RELATIONS if r not in ("clifford", "shared")])
def test_relation_examples(rel):
    assert check_relation(rel, P("ZI"), P("IZ"))
    assert check_relation(rel, P("XX"), P("YY"))


def test_clifford_conjugation_example():
    assert check_relation("clifford", P("ZI"), P("IZ"), clifford_gate("H1"))
    assert check_relation("clifford", P("XI"), P("IX"), clifford_gate("CZ"))


def test_shared_example():
    assert check_relation("shared", P("ZI"), P("IZ"), P("IX"))


def test_hypothesis_violations():
    with pytest.raises(HypothesisViolated):
        check_relation("swap", P("XI"), P("ZI"))
    with pytest.raises(HypothesisViolated):
        check_relation("clifford", P("ZI"), P("IZ"), clifford_gate("CS"))
    with pytest.raises(HypothesisViolated):
        check_relation("shared", P("ZI"), P("IZ"), P("ZZ"))
    with pytest.raises(HypothesisViolated):
        check_relation("bogus", P("ZI"), P("IZ"))


def test_triples_satisfy_hypotheses():
    for p, q, ell in list(valid_triples())[:200]:
        assert p * ell == ell * p
        assert q * ell == -(ell * q)


@pytest.mark.parametrize("rel", ["swap", "permute", "minus", "squared"])
def test_sweep_has_no_failures(rel):
    checked, failures = sweep(rel)
    assert checked > 0
    assert failures == []
