"""Baskets of terminal cyclic-quotient singularities.

A basket point is the pair ``(r, b)``: the index of the virtual cyclic
quotient and its pairing unit, written in the normal form 1/r(1,-1,b) with
``b`` normalized into ``[1, r//2]`` (``b`` and ``r-b`` contribute identically
to Riemann-Roch).  A basket is a multiset of such points.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .ratmod import Rational, lcm_all


class BasketError(ValueError):
    """Invalid basket point or basket-level precondition failure."""


def normalize_b(b: int, r: int) -> int:
    """Fold ``b`` into the canonical half-interval ``[1, r//2]``."""
    b = b % r
    if b == 0 or math.gcd(b, r) != 1:
        raise BasketError(f"pairing unit {b} not a unit mod {r}")
    return min(b, r - b) if r > 2 else 1


def units_half(r: int) -> list[int]:
    """Units mod ``r`` up to sign, i.e. candidates for the pairing unit."""
    if r == 2:
        return [1]
    return [b for b in range(1, r // 2 + 1) if math.gcd(b, r) == 1]


@dataclass(frozen=True, order=True)
class BasketPoint:
    r: int
    b: int = 1
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.r < 2:
            raise BasketError(f"basket point needs index >= 2, got {self.r}")
        if self.multiplicity < 1:
            raise BasketError("multiplicity must be positive")
        if not (1 <= self.b <= self.r // 2 or (self.r == 2 and self.b == 1)):
            raise BasketError(f"pairing unit {self.b} not normalized mod {self.r}")
        if math.gcd(self.b, self.r) != 1:
            raise BasketError(f"gcd(b={self.b}, r={self.r}) != 1")


@dataclass(frozen=True)
class Basket:
    points: tuple[BasketPoint, ...] = ()

    @staticmethod
    def make(points: Iterable[tuple[int, int] | tuple[int, int, int] | BasketPoint]) -> "Basket":
        """Build a basket from ``(r, b[, mult])`` tuples, merging duplicates."""
        counts: dict[tuple[int, int], int] = {}
        for p in points:
            if isinstance(p, BasketPoint):
                r, b, m = p.r, p.b, p.multiplicity
            elif len(p) == 2:
                (r, b), m = p, 1
            else:
                r, b, m = p
            counts[(r, normalize_b(b, r))] = counts.get((r, normalize_b(b, r)), 0) + m
        pts = tuple(
            BasketPoint(r, b, m) for (r, b), m in sorted(counts.items())
        )
        return Basket(pts)

    @staticmethod
    def from_indices(indices: Iterable[int], b: int | None = None) -> "Basket":
        """Index-only basket; every pairing unit defaults to 1 (or ``b``)."""
        pts = [(r, 1 if b is None else normalize_b(b, r)) for r in indices]
        return Basket.make(pts)

    def iter_points(self):
        """Yield ``(r, b)`` once per point, with multiplicity expanded."""
        for p in self.points:
            for _ in range(p.multiplicity):
                yield p.r, p.b

    def indices(self) -> list[int]:
        return sorted(r for r, _ in self.iter_points())

    def size(self) -> int:
        return sum(p.multiplicity for p in self.points)

    def serialize(self) -> list[list[int]]:
        return [[p.r, p.b, p.multiplicity] for p in self.points]

    def index_str(self) -> str:
        """Compact shorthand like ``(2^3, 3, 4, 5)``."""
        counts: dict[int, int] = {}
        for r in self.indices():
            counts[r] = counts.get(r, 0) + 1
        parts = [f"{r}^{c}" if c > 1 else str(r) for r, c in sorted(counts.items())]
        return "(" + ",".join(parts) + ")"


@dataclass(frozen=True)
class SingularPointSpec:
    """A geometric singular point, before expansion into basket points.

    ``kind`` is one of ``cyclic``, ``cA/r``, ``cAx/4``, ``cD/2``, ``cE/2``,
    ``gorenstein``; ``aw`` is the axial weight; ``a`` the quotient weight of a
    cyclic point of type 1/r(a, -a, 1).
    """

    kind: str
    r: int = 1
    aw: int = 1
    a: int = 1

    KINDS = ("cyclic", "cA/r", "cAx/4", "cD/2", "cE/2", "gorenstein")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise BasketError(f"unknown singularity kind {self.kind!r}")
        if self.kind == "cAx/4" and self.r != 4:
            raise BasketError("cAx/4 points have index 4")
        if self.kind == "cyclic" and self.aw != 1:
            raise BasketError("cyclic quotient points have axial weight 1")
        if self.aw < 1:
            raise BasketError("axial weight must be positive")


def expand_point(spec: SingularPointSpec) -> list[int]:
    """Basket indices contributed by one singular point.

    cAx/4 contributes one index-4 point plus aw-1 index-2 points; every other
    non-Gorenstein kind contributes aw copies of its own index.  Pairing units
    are left to the search.
    """
    if spec.kind == "gorenstein":
        return []
    if spec.r < 2:
        raise BasketError("non-Gorenstein point needs index > 1")
    if spec.kind == "cAx/4":
        return [4] + [2] * (spec.aw - 1)
    return [spec.r] * spec.aw


def kawamata_sum(basket: Basket) -> Rational:
    """Sum of r - 1/r over the basket (with multiplicity)."""
    return sum((Fraction(r * r - 1, r) for r, _ in basket.iter_points()), Fraction(0))


def anticanonical_c2(basket: Basket) -> Rational:
    """The intersection number -K.c2 = 24 - kawamata_sum for chi(O)=1."""
    s = kawamata_sum(basket)
    if s >= 24:
        raise BasketError(
            f"basket violates the terminal-Fano bound: sum(r - 1/r) = {s} >= 24"
        )
    return 24 - s


def global_index(basket: Basket) -> int:
    """lcm of the point indices (1 for the empty basket)."""
    return lcm_all(basket.indices())


def qw_equals_qq(q: int, basket: Basket) -> bool:
    """Whether the two Fano indices agree: gcd(q, global index) = 1."""
    if q < 1:
        raise BasketError("Fano index must be positive")
    return math.gcd(q, global_index(basket)) == 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(n**0.5) + 1):
        if n % p == 0:
            return False
    return True


def torsion_basket_check(
    basket: Basket, n: int
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Test whether an n-torsion divisor class is numerically allowed.

    An n-torsion class restricts to zero in the local class group Z/r unless
    n divides r, so only points of index divisible by n are eligible for the
    sub-basket where the class fails to be Cartier.  For that sub-basket:
    n=7 demands indices exactly (7,7,7); n=5 demands (5,5,5,5), (10,5,5) or
    (10,10); n=3 demands index sum 18; n=2 demands index sum 16.  Returns a
    witness sub-multiset when the test passes.
    """
    if not _is_prime(n):
        raise BasketError(f"torsion order must be prime, got {n}")
    if n not in (2, 3, 5, 7):
        return False, None
    eligible = sorted(r for r in basket.indices() if r % n == 0)
    if not eligible:
        return False, None
    if n == 7:
        if eligible.count(7) >= 3:
            return True, (7, 7, 7)
        return False, None
    if n == 5:
        for target in ((5, 5, 5, 5), (5, 5, 10), (10, 10)):
            need: dict[int, int] = {}
            for r in target:
                need[r] = need.get(r, 0) + 1
            if all(eligible.count(r) >= c for r, c in need.items()):
                return True, tuple(sorted(target))
        return False, None
    target_sum = 18 if n == 3 else 16
    return _submultiset_with_sum(eligible, target_sum)


def _submultiset_with_sum(
    values: list[int], target: int
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """First nonempty sub-multiset of ``values`` with the given sum."""
    values = sorted(values, reverse=True)

    def rec(i: int, remaining: int, chosen: list[int]):
        if remaining == 0 and chosen:
            return tuple(sorted(chosen))
        if i == len(values) or remaining < 0:
            return None
        if sum(values[i:]) < remaining:
            return None
        take = rec(i + 1, remaining - values[i], chosen + [values[i]])
        if take is not None:
            return take
        return rec(i + 1, remaining, chosen)

    hit = rec(0, target, [])
    return (hit is not None), hit


_SHORTHAND = re.compile(r"^\s*(\d+)(?:\^(\d+))?(?::(\d+))?\s*$")


def parse_basket(text: str) -> Basket:
    """Parse CLI basket shorthand.

    Entries are comma separated; each is ``r``, ``r^mult`` or ``r:b`` (and
    ``r^mult:b``); surrounding parentheses are optional.  Examples:
    ``"2,2,3,4"``, ``"(2^3, 3, 4, 5)"``, ``"2,6,10:3"``.
    """
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return Basket()
    points: list[tuple[int, int, int]] = []
    for entry in text.split(","):
        m = _SHORTHAND.match(entry.replace(" ", ""))
        if not m:
            raise BasketError(f"cannot parse basket entry {entry!r}")
        r = int(m.group(1))
        mult = int(m.group(2) or 1)
        b = normalize_b(int(m.group(3) or 1), r)
        points.append((r, b, mult))
    return Basket.make(points)
