"""The R(P, Q) relations, as exact checks.

Relation ids:

    clifford   C·R(P,Q)·C† = R(CPC†, CQC†)
    swap       R(P,Q) = R(Q,P)
    permute    R(P,-PQ) = R(P,Q)
    minus      R(P,-Q) ∈ R(P,Q)·Clifford
    squared    R(P,Q)² ∈ Clifford
    shared     R(P,L)·R(P,Q) = R(P,Q)·R(P,iQL)
"""

from __future__ import annotations

from itertools import product as cartesian
from typing import Iterator

from .errors import HypothesisViolated, PreconditionViolated
from .paulis import Pauli2, commutes, hermitian_nonidentity, identify
from .gates import r_gate_matrix
from .so6 import is_clifford
from .u4 import U4Matrix

RELATIONS = ("clifford", "swap", "permute", "minus", "squared", "shared")


def _r(p: Pauli2, q: Pauli2) -> U4Matrix:
    try:
        return r_gate_matrix(p, q)
    except PreconditionViolated as exc:
        raise HypothesisViolated(str(exc)) from exc


def _pair_ok(p: Pauli2, q: Pauli2) -> bool:
    return p.is_hermitian and q.is_hermitian and not p.is_identity and not q.is_identity \
        and p != q and commutes(p, q)


def check_relation(rel: str, p: Pauli2, q: Pauli2, extra: Pauli2 | U4Matrix | None = None) -> bool:
    """Decide one relation exactly.

    ``extra`` is the Clifford operator C for "clifford" and the Pauli L for
    "shared"; other relations ignore it.
    """
    if not _pair_ok(p, q):
        raise HypothesisViolated(f"({p}, {q}) is not a commuting pair of distinct Hermitian Paulis")
    if rel == "clifford":
        if not isinstance(extra, U4Matrix) or not is_clifford(extra):
            raise HypothesisViolated("the clifford relation needs a Clifford operator")
        c, cd = extra, extra.adjoint()
        cp, cq = identify(c @ p.matrix() @ cd), identify(c @ q.matrix() @ cd)
        if cp is None or cq is None:
            return False
        return c @ _r(p, q) @ cd == _r(cp, cq)
    if rel == "swap":
        return _r(p, q) == _r(q, p)
    if rel == "permute":
        return _r(p, -(p * q)) == _r(p, q)
    if rel == "minus":
        return is_clifford(_r(p, q).adjoint() @ _r(p, -q))
    if rel == "squared":
        r = _r(p, q)
        return is_clifford(r @ r)
    if rel == "shared":
        ell = extra
        if not isinstance(ell, Pauli2) or not ell.is_hermitian or ell.is_identity:
            raise HypothesisViolated("the shared relation needs a Hermitian non-identity Pauli L")
        if ell in (p, q) or not commutes(p, ell) or commutes(q, ell):
            raise HypothesisViolated(f"need PL = LP and QL = -LQ for L = {ell}")
        return _r(p, ell) @ _r(p, q) == _r(p, q) @ _r(p, (q * ell).times_i())
    raise HypothesisViolated(f"unknown relation {rel!r}")


def valid_pairs() -> Iterator[tuple[Pauli2, Pauli2]]:
    ps = hermitian_nonidentity()
    return ((p, q) for p, q in cartesian(ps, ps) if _pair_ok(p, q))


def valid_triples() -> Iterator[tuple[Pauli2, Pauli2, Pauli2]]:
    ps = hermitian_nonidentity()
    for p, q in valid_pairs():
        for ell in ps:
            if ell not in (p, q) and commutes(p, ell) and not commutes(q, ell):
                yield p, q, ell


def sweep(rel: str, cliffords: list[U4Matrix] | None = None) -> tuple[int, list]:
    """Check a relation over every valid pair (or triple); return (checked, failures).

    Cases where a derived gate is undefined, such as R(P, -PQ) with PQ = -I,
    fall outside the hypotheses and are skipped.
    """
    checked, failures = 0, []
    if rel == "shared":
        cases = ((p, q, ell) for p, q, ell in valid_triples())
    elif rel == "clifford":
        cs = cliffords or []
        cases = ((p, q, c) for p, q in valid_pairs() for c in cs)
    else:
        cases = ((p, q, None) for p, q in valid_pairs())
    for p, q, x in cases:
        try:
            ok = check_relation(rel, p, q, x)
        except HypothesisViolated:
            continue
        checked += 1
        if not ok:
            failures.append((p, q, x))
    return checked, failures
