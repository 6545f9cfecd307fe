"""Orbifold Riemann-Roch for numerical Q-Fano threefolds.

For a Weil divisor class D on a terminal threefold with chi(O) = 1,

    chi(D) = 1 + D(D - K)(2D - K)/12 + D.c2/12 + sum over basket points c_P(D)

where each basket point 1/r(1,-1,b) contributes, for D of local eigentype i,

    c_P = -i (r^2 - 1)/(12 r) + sum_{j=1}^{i-1} jb~ (r - jb~)/(2 r),

with x~ the smallest residue of x mod r.  The fundamental class A of a Fano
threefold of index q (so -K ~ qA up to torsion) has local eigentype
-inv(q, r) mod r at every point, hence mA has eigentype -m inv(q, r) mod r.
This normalization is pinned by the weighted-hypersurface fixtures (see the
tests): any consistent relabeling of the local group changes b and the
eigentype together and leaves chi unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence

from .basket import Basket, BasketError, anticanonical_c2
from .ratmod import Rational

ALLOWED_Q = (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 17, 19)


class InvalidCandidateError(ValueError):
    """chi(mA) failed integrality or positivity; carries the first bad m."""

    def __init__(self, message: str, m: int | None = None):
        super().__init__(message)
        self.m = m


class TorsionAmbiguousError(ValueError):
    """gcd(q, r) > 1: the local type of A is not determined by (q, basket)."""


class InsufficientDataError(ValueError):
    """A torsion candidate was queried without equivariant data."""


@lru_cache(maxsize=None)
def local_contribution(r: int, b: int, i: int) -> Rational:
    """Per-point Riemann-Roch correction for local eigentype ``i``."""
    if r < 2:
        raise BasketError(f"basket point needs index >= 2, got {r}")
    if gcd(b, r) != 1:
        raise BasketError(f"invalid basket point: gcd({b}, {r}) != 1")
    if not 0 <= i < r:
        raise BasketError(f"local type {i} not reduced mod {r}")
    total = Fraction(-i * (r * r - 1), 12 * r)
    for j in range(1, i):
        jb = (j * b) % r
        total += Fraction(jb * (r - jb), 2 * r)
    return total


def local_type(q: int, r: int, m: int) -> int:
    """Local eigentype of mA at an index-r point: -m * inv(q, r) mod r."""
    if gcd(q, r) != 1:
        raise TorsionAmbiguousError(
            f"gcd(q={q}, r={r}) > 1: use equivariant counting instead"
        )
    return (-m * pow(q, -1, r)) % r


def chi_mA(q: int, A3: Rational, basket: Basket, m: int) -> Rational:
    """chi(O(mA)) for the numerical type (q, A3, basket)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    value = (
        1
        + A3 * m * (m + q) * (2 * m + q) / 12
        + Fraction(m, 12 * q) * anticanonical_c2(basket)
    )
    for r, b in basket.iter_points():
        value += local_contribution(r, b, local_type(q, r, m))
    return value


def chi_twisted(
    q: int, A3: Rational, basket: Basket, m: int, twists: Sequence[int], j: int
) -> Rational:
    """chi(O(mA + jT)) where the torsion class T has local eigentype
    ``twists[k]`` at the k-th basket point (points in ``iter_points`` order).

    T is numerically trivial, so the global polynomial part is that of mA;
    only the local eigentypes shift by j * twists[k].
    """
    pts = list(basket.iter_points())
    if len(twists) != len(pts):
        raise ValueError("one twist per basket point required")
    value = (
        1
        + A3 * m * (m + q) * (2 * m + q) / 12
        + Fraction(m, 12 * q) * anticanonical_c2(basket)
    )
    for (r, b), t in zip(pts, twists):
        i = (local_type(q, r, m) + j * t) % r
        value += local_contribution(r, b, i)
    return value


@dataclass
class FanoCandidate:
    """A numerical Q-Fano type: one row of the candidate tables."""

    q: int
    basket: Basket
    A3: Rational
    torsion_order: int = 1
    row: list[int] = field(default_factory=list)
    tau: Optional[tuple[int, ...]] = None  # torsion local types, if any

    def __post_init__(self) -> None:
        if self.q not in ALLOWED_Q:
            raise InvalidCandidateError(f"Fano index {self.q} not in {ALLOWED_Q}")
        if self.A3 <= 0:
            raise InvalidCandidateError(f"A^3 must be positive, got {self.A3}")


def default_truncation(q: int) -> int:
    return max(q + 3, 12)


def hilbert_row(candidate: FanoCandidate, M: int | None = None) -> list[int]:
    """h^0(mA) = chi(mA) for m = 0..M (vanishing assumed for ample -K).

    Raises InvalidCandidateError on the first non-integral or negative value;
    the search treats that exception as its pruning signal.
    """
    if M is None:
        M = default_truncation(candidate.q)
    row: list[int] = []
    for m in range(M + 1):
        v = chi_mA(candidate.q, candidate.A3, candidate.basket, m)
        if v.denominator != 1:
            raise InvalidCandidateError(f"chi({m}A) = {v} is not an integer", m)
        if v < 0:
            raise InvalidCandidateError(f"chi({m}A) = {v} is negative", m)
        row.append(int(v))
    return row


def genus(candidate: FanoCandidate) -> int:
    """g = h^0(-K) - 2 = chi(qA) - 2."""
    v = chi_mA(candidate.q, candidate.A3, candidate.basket, candidate.q)
    if v.denominator != 1:
        raise InvalidCandidateError(f"chi(-K) = {v} is not an integer", candidate.q)
    return int(v) - 2


def p_n(candidate: FanoCandidate, n: int, equivariant=None) -> int:
    """p_n = max h^0 over classes numerically equivalent to nA.

    Torsion-free candidates read the plain Hilbert row; torsion candidates
    need an equivariant series (wps.EquivariantSeries or a [m][j] table).
    """
    if candidate.torsion_order == 1:
        if not candidate.row:
            candidate.row = hilbert_row(candidate, max(n, default_truncation(candidate.q)))
        if n >= len(candidate.row):
            candidate.row = hilbert_row(candidate, n)
        return candidate.row[n]
    if equivariant is None:
        raise InsufficientDataError(
            "torsion candidate: supply an equivariant series for p_n"
        )
    table = getattr(equivariant, "h", equivariant)
    return max(table[n])
