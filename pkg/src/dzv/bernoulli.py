"""Exact Bernoulli numbers and the classical convolution identities.

Convention: B_1 = -1/2, as forced by the generating function X/(e^X - 1).
All results are exact rationals; identity checks compare exact values, never
approximations.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .numerics import DomainError

__all__ = [
    "BernoulliCache",
    "IdentityVerdict",
    "bernoulli",
    "euler_identity_check",
    "ramanujan_sum",
    "ramanujan_check",
]


class BernoulliCache:
    """Growable, thread-safe sequence of Bernoulli numbers.

    Extension uses the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for
    B_m; odd-index terms beyond B_1 vanish and are skipped in the inner sum.
    """

    def __init__(self):
        self._values = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def get(self, m: int) -> Fraction:
        if m < 0:
            raise DomainError("Bernoulli index must be nonnegative")
        if m < len(self._values):
            return self._values[m]
        with self._lock:
            while len(self._values) <= m:
                n = len(self._values)
                if n % 2 == 1:
                    self._values.append(Fraction(0))
                    continue
                s = Fraction(comb(n + 1, 1), -2)  # j = 1 term, B_1 = -1/2
                for j in range(0, n, 2):
                    bj = self._values[j]
                    if bj:
                        s += comb(n + 1, j) * bj
                self._values.append(-s / (n + 1))
        return self._values[m]


_cache = BernoulliCache()


def bernoulli(m: int) -> Fraction:
    """Exact B_m (B_0 = 1, B_1 = -1/2, B_2 = 1/6, ...)."""
    return _cache.get(m)


@dataclass(frozen=True)
class IdentityVerdict:
    """Outcome of an exact rational identity check."""

    lhs: Fraction
    rhs: Fraction
    holds: bool
    weight: int
    label: str


def _verdict(lhs: Fraction, rhs: Fraction, weight: int, label: str) -> IdentityVerdict:
    return IdentityVerdict(lhs, rhs, lhs == rhs, weight, label)


def euler_identity_check(l: int) -> IdentityVerdict:
    """Check sum_{j even, 0<=j<=l} C(l,j) B_j B_{l-j} = -(l-1) B_l exactly.

    Requires even l >= 4.
    """
    if l % 2 != 0 or l < 4:
        raise DomainError("the Bernoulli convolution identity needs even l >= 4")
    lhs = Fraction(0)
    for j in range(0, l + 1, 2):
        bj = bernoulli(j)
        if bj:
            lhs += comb(l, j) * bj * bernoulli(l - j)
    rhs = -(l - 1) * bernoulli(l)
    return _verdict(lhs, rhs, l, f"euler-bernoulli[l={l}]")


def _require_gap6_weight(l: int) -> None:
    if l % 6 != 2 or l < 8:
        raise DomainError("gap-6 identities need l = 2 (mod 6) and l >= 8")


def ramanujan_sum(l: int, m: int) -> Fraction:
    """Exact sum_{j = m (mod 6), 0 <= j <= l} C(l,j) B_j B_{l-j}."""
    _require_gap6_weight(l)
    if m not in (0, 2, 4):
        raise DomainError("residue m must be one of 0, 2, 4")
    total = Fraction(0)
    for j in range(m, l + 1, 6):
        bj = bernoulli(j)
        if bj:
            total += comb(l, j) * bj * bernoulli(l - j)
    return total


def ramanujan_check(l: int) -> tuple[IdentityVerdict, IdentityVerdict, IdentityVerdict]:
    """Check the three gap-6 convolution identities of weight l.

    Each residue class m in {0, 2, 4} must satisfy
    sum_{j = m (6)} C(l,j) B_j B_{l-j} = -((l-1)/3) B_l.
    """
    _require_gap6_weight(l)
    rhs = Fraction(-(l - 1), 3) * bernoulli(l)
    return tuple(
        _verdict(ramanujan_sum(l, m), rhs, l, f"ramanujan[l={l},m={m}]")
        for m in (0, 2, 4)
    )
