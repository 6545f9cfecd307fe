"""Weighted-projective hypersurface oracles.

Monomial counting gives the Hilbert series of a quasi-smooth hypersurface of
degree d in P(w1..wk) as the coefficient expansion of (1 - t^d)/prod(1-t^wi);
a mu_n-action refines the count by character.  These series are the
independent oracle against which the Riemann-Roch engine is calibrated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .ratmod import Rational


class WpsError(ValueError):
    """Malformed hypersurface data or inconsistent group action."""


@dataclass(frozen=True)
class MuAction:
    """A mu_n-action: coordinate characters plus the equation's character."""

    order: int
    weights: tuple[int, ...]
    equation_character: int = 0

    def __post_init__(self) -> None:
        if self.order < 1:
            raise WpsError("group order must be >= 1")


@dataclass(frozen=True)
class WeightedHypersurface:
    weights: tuple[int, ...]
    degree: int
    action: Optional[MuAction] = None

    def __post_init__(self) -> None:
        if len(self.weights) not in (4, 5):
            raise WpsError("expected 4 or 5 weights")
        if any(w < 1 for w in self.weights):
            raise WpsError("weights must be positive")
        if self.degree < 1:
            raise WpsError("degree must be positive")
        if self.action and len(self.action.weights) != len(self.weights):
            raise WpsError("action needs one character per coordinate")


def fano_index(wh: WeightedHypersurface) -> int:
    """sum(weights) - degree, positive for a Fano hypersurface."""
    q = sum(wh.weights) - wh.degree
    if q <= 0:
        raise WpsError(f"not Fano: degree {wh.degree} >= sum of weights")
    return q


def degree_A3(wh: WeightedHypersurface) -> Rational:
    """A^3 = d / prod(weights), divided by the group order if quotiented."""
    out = Fraction(wh.degree)
    for w in wh.weights:
        out /= w
    if wh.action:
        out /= wh.action.order
    return out


@lru_cache(maxsize=None)
def _count_monomials(weights: tuple[int, ...], k: int) -> int:
    """Number of exponent tuples with weighted degree exactly k."""
    if k < 0:
        return 0
    if not weights:
        return 1 if k == 0 else 0
    w = weights[0]
    return sum(_count_monomials(weights[1:], k - w * e) for e in range(k // w + 1))


def _iter_monomials(weights: tuple[int, ...], k: int):
    if k < 0:
        return
    if not weights:
        if k == 0:
            yield ()
        return
    w = weights[0]
    for e in range(k // w + 1):
        for rest in _iter_monomials(weights[1:], k - w * e):
            yield (e,) + rest


def hilbert_coeff(wh: WeightedHypersurface, k: int) -> int:
    """Coefficient of t^k in (1 - t^d)/prod(1 - t^wi)."""
    if k < 0:
        raise WpsError("k must be nonnegative")
    return _count_monomials(wh.weights, k) - _count_monomials(
        wh.weights, k - wh.degree
    )


@dataclass
class EquivariantSeries:
    """Character-refined Hilbert table: h[m][j] for m = 0..M, j = 0..n-1."""

    order: int
    h: list[list[int]]

    def row(self, m: int) -> list[int]:
        return self.h[m]

    def sheared(self, shift: int, flip: bool = False) -> "EquivariantSeries":
        """Relabel the torsion classes: j -> +-j + m*shift (mod n).

        A different choice of the fundamental class among its torsion twists
        shears the table; replacing the torsion generator by its inverse
        flips the character axis.  Both leave the geometry unchanged.
        """
        n = self.order
        out = []
        for m, row in enumerate(self.h):
            new = [0] * n
            for j in range(n):
                src = ((-j if flip else j) + m * shift) % n
                new[j] = row[src]
            out.append(new)
        return EquivariantSeries(n, out)


def _char_counts(weights, chars, n, k) -> list[int]:
    out = [0] * n
    for expo in _iter_monomials(tuple(weights), k):
        c = sum(e * ch for e, ch in zip(expo, chars)) % n
        out[c] += 1
    return out


def equivariant_series(wh: WeightedHypersurface, M: int) -> EquivariantSeries:
    """h[m][j] = #(degree-m, character-j monomials) - #(degree m-d, j - c_f)."""
    if wh.action is None:
        return EquivariantSeries(1, [[hilbert_coeff(wh, m)] for m in range(M + 1)])
    n = wh.action.order
    chars = wh.action.weights
    cf = wh.action.equation_character % n
    if _char_counts(wh.weights, chars, n, wh.degree)[cf] == 0:
        raise WpsError(
            f"no degree-{wh.degree} monomial of character {cf}: inconsistent action"
        )
    table: list[list[int]] = []
    for m in range(M + 1):
        top = _char_counts(wh.weights, chars, n, m)
        if m >= wh.degree:
            low = _char_counts(wh.weights, chars, n, m - wh.degree)
            top = [top[j] - low[(j - cf) % n] for j in range(n)]
        table.append(top)
    return EquivariantSeries(n, table)


# --- degree-10 hypersurfaces in P(1,2,3,4,5) -------------------------------

X10_WEIGHTS = (1, 2, 3, 4, 5)

CASE_A = "case-a-cyclic"
CASE_B = "case-b-cAx4"
RATIONAL_BY_PROJECTION = "rational-by-projection"
NON_TERMINAL = "non-terminal"


@dataclass(frozen=True)
class X10Classification:
    case: str
    lam: Optional[Rational] = None  # coefficient of x4^2 x1^2 in case b
    p3_via_x4x3sq: Optional[bool] = None  # case a: x3^2 enters through x4*phi6
    rational: Optional[bool] = None


def _wdeg(expo: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(expo, X10_WEIGHTS))


def classify_x10(poly: dict[tuple[int, ...], Rational]) -> X10Classification:
    """Terminal-normal-form classification of X10 in P(1,2,3,4,5).

    After completing the square in the degree-5 variable, the index-4 point
    forces either x4^2 x2 (cyclic quotient; case a) or x4 x3^2 (cAx/4;
    case b).  In case b the coefficient lambda of x4^2 x1^2 decides the
    rationality mechanism: lambda = 0 makes the projection away from x5
    birational, lambda != 0 splits x5^2 - x4^2 after scaling.  Either way the
    case-b variety is rational.
    """
    phi = {tuple(e): Fraction(c) for e, c in poly.items() if c != 0}
    for expo in phi:
        if len(expo) != 5:
            raise WpsError("exponent tuples must have 5 entries")
        if _wdeg(expo) != 10:
            raise WpsError(f"monomial {expo} does not have weighted degree 10")

    x5sq = (0, 0, 0, 0, 2)
    a = phi.get(x5sq, Fraction(0))
    if a == 0:
        return X10Classification(NON_TERMINAL)

    # Complete the square: x5 -> x5 - B/(2a) with B the x5-linear part.
    linear = {e: c for e, c in phi.items() if e[4] == 1}
    reduced = {e: c for e, c in phi.items() if e[4] == 0}
    for e1, c1 in linear.items():
        for e2, c2 in linear.items():
            prod = tuple(
                x + y for x, y in zip(e1[:4] + (0,), e2[:4] + (0,))
            )
            reduced[prod] = reduced.get(prod, Fraction(0)) - c1 * c2 / (4 * a)
    reduced = {e: c for e, c in reduced.items() if c != 0}
    reduced[x5sq] = a

    def coeff(expo: tuple[int, ...]) -> Rational:
        return reduced.get(expo, Fraction(0))

    if coeff((0, 1, 0, 2, 0)) != 0:  # x4^2 x2: cyclic index-4 point
        via_x4 = coeff((0, 0, 2, 1, 0)) != 0  # x4 x3^2
        via_x1 = coeff((1, 0, 3, 0, 0)) != 0  # x3^3 x1
        if not (via_x4 or via_x1):
            return X10Classification(NON_TERMINAL)  # index-3 point not cyclic
        return X10Classification(CASE_A, p3_via_x4x3sq=via_x4)
    if coeff((0, 0, 2, 1, 0)) != 0:  # x4 x3^2: cAx/4 point
        lam = coeff((2, 0, 0, 2, 0))
        if lam == 0:
            return X10Classification(
                RATIONAL_BY_PROJECTION, lam=lam, rational=True
            )
        return X10Classification(CASE_B, lam=lam, rational=True)
    return X10Classification(NON_TERMINAL)


# --- del Pezzo surfaces with Cl = Z ----------------------------------------

@dataclass(frozen=True)
class DelPezzoSurface:
    name: str
    weights: tuple[int, ...]
    degree: Optional[int]  # None for the toric cases
    K2: int
    qW: int
    A2: Rational
    singularities: str


DEL_PEZZO_SURFACES = {
    "P2": DelPezzoSurface("P2", (1, 1, 1), None, 9, 3, Fraction(1), ""),
    "P(1,1,2)": DelPezzoSurface("P(1,1,2)", (1, 1, 2), None, 8, 4, Fraction(1, 2), "A1"),
    "P(1,2,3)": DelPezzoSurface("P(1,2,3)", (1, 2, 3), None, 6, 6, Fraction(1, 6), "A1+A2"),
    "S_DP5": DelPezzoSurface("S_DP5", (1, 2, 3, 5), 6, 5, 5, Fraction(1, 5), "A4"),
}


def dp_dims(name: str, k: int) -> int:
    """dim |kA| on the four del Pezzo surfaces, by monomial counting."""
    if k < 1:
        raise WpsError("k must be >= 1")
    try:
        surface = DEL_PEZZO_SURFACES[name]
    except KeyError:
        raise WpsError(f"unknown del Pezzo surface {name!r}") from None
    count = _count_monomials(surface.weights, k)
    if surface.degree is not None:
        count -= _count_monomials(surface.weights, k - surface.degree)
    return count - 1
