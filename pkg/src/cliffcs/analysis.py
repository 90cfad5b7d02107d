"""Counting formulas, the ε-approximation lower bound, and lde statistics.

All counts include the eight global phases ω^j.  The lower bound is the only
place where inexact arithmetic appears; it uses mpmath at 40 digits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import mpmath

from .errors import BadEpsilon, BadInput, NotInGroup
from .rings import DyadicScalar
from .u4 import U4Matrix

CLIFFORD_ORDER = 92160
PRECISION_DIGITS = 40


def count_exact(n: int) -> int:
    """Operators of CS-count exactly n ≥ 1."""
    if n < 1:
        raise BadInput("count_exact needs n ≥ 1; there are 92160 Clifford operators at n = 0")
    return 86400 * (3 * 8**n - 2 * 4**n)


def count_upto(n: int) -> int:
    """Operators of CS-count at most n."""
    if n < 0:
        raise BadInput("count_upto needs n ≥ 0")
    num = 46080 * (45 * 8**n - 35 * 4**n + 4)
    q, r = divmod(num, 7)
    assert r == 0, "the cumulative count must be an integer"
    return q


@dataclass(frozen=True)
class CountReport:
    n: int
    exact_count: int
    cumulative_count: int


def count_report(n: int) -> CountReport:
    return CountReport(n, count_exact(n) if n else CLIFFORD_ORDER, count_upto(n))


# ----------------------------------------------------------------- ε bound


@dataclass(frozen=True)
class BoundReport:
    epsilon: mpmath.mpf
    headline: mpmath.mpf      # 5·log2(1/ε) - 0.67
    volume_root: mpmath.mpf   # real n with (count_upto(n)/2)·ball(ε) = vol SU(4)
    volume_integer: int       # least integer n meeting the volume condition

    @property
    def lower_bound(self) -> mpmath.mpf:
        return self.headline


def _volume_terms(eps: mpmath.mpf) -> tuple[mpmath.mpf, mpmath.mpf]:
    vol_su4 = mpmath.sqrt(2) * mpmath.pi**9 / 3
    ball = mpmath.pi ** mpmath.mpf(7.5) / mpmath.gamma(mpmath.mpf(8.5)) * eps**15
    return vol_su4, ball


def _covered(n, eps):
    vol_su4, ball = _volume_terms(eps)
    count = mpmath.mpf(46080) / 7 * (45 * mpmath.power(8, n) - 35 * mpmath.power(4, n) + 4)
    return count / 2 * ball - vol_su4


def epsilon_lower_bound(epsilon) -> BoundReport:
    with mpmath.workdps(PRECISION_DIGITS):
        eps = mpmath.mpf(epsilon)
        if not (0 < eps < 1):
            raise BadEpsilon(f"need 0 < ε < 1, got {epsilon}")
        headline = 5 * mpmath.log(1 / eps, 2) - mpmath.mpf("0.67")
        # The covered volume is increasing in n, so bisection is safe.
        lo, hi = mpmath.mpf(0), mpmath.mpf(1)
        while _covered(hi, eps) < 0:
            hi *= 2
        if _covered(lo, eps) >= 0:
            root = lo
        else:
            for _ in range(200):
                mid = (lo + hi) / 2
                if _covered(mid, eps) < 0:
                    lo = mid
                else:
                    hi = mid
            root = hi
        n = int(mpmath.ceil(root))
        while n > 0 and _covered(n - 1, eps) >= 0:
            n -= 1
        while _covered(n, eps) < 0:
            n += 1
        return BoundReport(eps, headline, root, n)


def asymptotic_constant() -> mpmath.mpf:
    """c in n ≈ 5·log2(1/ε) + c, from the leading 8^n term of the count."""
    with mpmath.workdps(PRECISION_DIGITS):
        vol_su4, ball1 = _volume_terms(mpmath.mpf(1))
        lead = mpmath.mpf(46080) / 7 * 45 / 2
        return mpmath.log(vol_su4 / (lead * ball1), 2) / 3


# ------------------------------------------------------------ lde vs count


def su4_lde(u: U4Matrix) -> int:
    """Least k with √2^k·u over Z[i]; needs det(u) = 1."""
    if u.det() != DyadicScalar.one():
        raise NotInGroup("the SU(4) least denominator exponent needs determinant 1")
    for extra in range(3):
        k = u.k + extra
        ok = True
        for i in range(4):
            for j in range(4):
                x = u.coords(i, j)
                for _ in range(extra):
                    a, b, c, d = x
                    x = (b - d, a + c, b + d, c - a)
                if x[1] or x[3]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return k
    raise NotInGroup("no power of √2 brings the entries into Z[i]")


def det_one_phase(u: U4Matrix) -> U4Matrix | None:
    """ω^j·u with determinant 1, or None when no ω-power phase fixes det(u)."""
    one = DyadicScalar.one()
    for j in range(2):
        v = u.times_omega(j)
        if v.det() == one:
            return v
    return None


@dataclass
class SandwichReport:
    pairs: list[tuple[int, int]] = field(default_factory=list)
    skipped: int = 0
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def max_ratio(self) -> float:
        return max((kp / k for k, kp in self.pairs if k), default=0.0)


def in_sandwich(k: int, kp: int) -> bool:
    return 2 * kp >= k - 3 and kp <= 2 * k + 2


def lde_vs_cscount(operators: Iterable[U4Matrix]) -> SandwichReport:
    """(k, k') for each det-1-fixable operator; others are counted as skipped."""
    from .synthesis import synthesize

    rep = SandwichReport()
    for u in operators:
        v = det_one_phase(u)
        if v is None:
            rep.skipped += 1
            continue
        k, kp = su4_lde(v), synthesize(v).cs_count
        rep.pairs.append((k, kp))
        if not in_sandwich(k, kp):
            rep.violations.append((k, kp))
    return rep


ADVERSARIAL_BLOCK = (7, 1, 6, 3)  # R(X⊗I,I⊗Z)·R(X⊗I,I⊗X)·R(Z⊗I,I⊗X)·R(Z⊗I,I⊗Z)


def adversarial_operator(m: int) -> U4Matrix:
    from .synthesis import evaluate_syllables

    return evaluate_syllables(ADVERSARIAL_BLOCK * m)
