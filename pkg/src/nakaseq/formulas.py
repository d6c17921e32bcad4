"""Closed-form counts and sizes of full sequences for several algebra families.

These are exact integer formulas, evaluated with :mod:`fractions` where the
closed form has rational intermediate values. They serve as independent
predictions for :func:`nakaseq.excseq.enumerate_sequences`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal

from .algebra import NakayamaAlgebra, hereditary_a, linear_rad2, selfinjective

Family = Literal["selfinj-nn", "selfinj-n1n", "lambda2", "hereditary-a", "linear-rad2"]

_MIN_PARAM = {"selfinj-nn": 2, "selfinj-n1n": 3, "lambda2": 2, "hereditary-a": 1, "linear-rad2": 1}


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    n: int

    def __post_init__(self) -> None:
        if self.family not in _MIN_PARAM:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < _MIN_PARAM[self.family]:
            raise ValueError(f"{self.family} needs parameter >= {_MIN_PARAM[self.family]}, got {self.n}")

    def algebra(self) -> NakayamaAlgebra:
        n = self.n
        if self.family == "selfinj-nn":
            return selfinjective(n, n)
        if self.family == "selfinj-n1n":
            return selfinjective(n, n - 1)
        if self.family == "lambda2":
            return selfinjective(n, 2)
        if self.family == "hereditary-a":
            return hereditary_a(n)
        return linear_rad2(n)

    @property
    def mode(self) -> str:
        """Which notion of exceptional sequence the formula counts."""
        return "standard" if self.family in ("hereditary-a", "linear-rad2") else "weak"


def _exact_int(q: Fraction) -> int:
    assert q.denominator == 1, f"non-integral value {q}"
    return q.numerator


def _two_cos_n_pi_over_3(n: int) -> int:
    return (2, 1, -1, -2, -1, 1)[n % 6]


def predicted_count(p: FamilyParams) -> int:
    n = p.n
    if p.family == "selfinj-nn":
        return n**n
    if p.family == "selfinj-n1n":
        return n
    if p.family == "lambda2":
        if n % 2:
            return n
        k = n // 2
        return _exact_int(2 * k * (1 + Fraction(8**k, 12) - Fraction((-1) ** k, 3)))
    if p.family == "hereditary-a":
        # Seidel: (m+1)^(m-1) sequences for A_m
        return (n + 1) ** (n - 1)
    # idempotent self-maps of an n-set
    return sum(comb(n, j) * j ** (n - j) for j in range(1, n + 1))


def predicted_size(p: FamilyParams) -> int:
    n = p.n
    if p.family == "selfinj-nn":
        return n
    if p.family == "selfinj-n1n":
        return 2 * n - 2
    if p.family == "lambda2":
        k = n // 2
        return 3 * k + 1 if n % 2 else 3 * k - 1
    return n


def c_bodies(x: int, y: int) -> int:
    """Interleavings of two bodies of ``x`` and ``y`` modules; checked against ``C(x+y-1, y) - 1``."""
    if x < 2 or y < 1:
        raise ValueError(f"need x >= 2 and y >= 1, got x={x}, y={y}")
    total = sum(comb(y + j - 2, j - 1) for j in range(2, x + 1))
    closed = comb(y + x - 1, y) - 1
    assert total == closed, (x, y, total, closed)
    return total


def mod_three_binomial_sum(n: int) -> int:
    """Sum of ``C(n, j)`` over ``j`` divisible by 3."""
    if n < 0:
        raise ValueError("n must be non-negative")
    direct = sum(comb(n, j) for j in range(0, n + 1, 3))
    closed = _exact_int(Fraction(2**n + _two_cos_n_pi_over_3(n), 3))
    assert direct == closed, (n, direct, closed)
    return direct


def braid2_total(k: int) -> int:
    """Full sequences of the selfinjective algebra with ``2k`` vertices and ``k = 2``, per rotation class."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = 1 + k + sum(c_bodies(3 * j + 1, 3 * k - 3 * j - 2) for j in range(1, k))
    closed = _exact_int(1 + Fraction(8**k, 12) - Fraction((-1) ** k, 3))
    assert total == closed, (k, total, closed)
    return total
