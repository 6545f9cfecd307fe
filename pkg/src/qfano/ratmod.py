"""Exact rational arithmetic and modular-residue helpers.

Every quantity in this package is an exact ``fractions.Fraction`` (re-exported
as ``Rational``) or a plain integer; floating point is never used.  Residues
carry their modulus so that mixed-modulus arithmetic fails loudly instead of
silently coercing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class ModulusError(ValueError):
    """Raised for a zero modulus or a modulus mismatch."""


class NonInvertibleError(ValueError):
    """Raised when asked to invert a unit that is not one."""


@dataclass(frozen=True)
class Residue:
    """Canonical representative ``value`` of a class mod ``modulus``."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ModulusError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ModulusError(
                f"residue {self.value} not canonical mod {self.modulus}"
            )

    def _check(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ModulusError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value * other.value) % self.modulus, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue((-self.value) % self.modulus, self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value


def bar(x: int, r: int) -> Residue:
    """Canonical residue of ``x`` mod ``r`` in ``[0, r)``."""
    if r < 1:
        raise ModulusError(f"modulus must be >= 1, got {r}")
    return Residue(x % r, r)


def inv_mod(a: int, r: int) -> Residue:
    """The unit ``u`` with ``a*u == 1 (mod r)``."""
    if r < 1:
        raise ModulusError(f"modulus must be >= 1, got {r}")
    g = math.gcd(a, r)
    if g != 1:
        raise NonInvertibleError(f"{a} is not invertible mod {r} (gcd {g})")
    return Residue(pow(a, -1, r), r)


def lcm_all(values) -> int:
    """Least common multiple of a list of positive integers (empty -> 1)."""
    out = 1
    for v in values:
        if v < 1:
            raise ValueError(f"lcm_all needs positive integers, got {v}")
        out = math.lcm(out, v)
    return out


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"`` or ``"p"``; decimal notation is rejected."""
    text = text.strip()
    if "." in text:
        raise ValueError(f"decimal notation not accepted: {text!r}")
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(x: Rational) -> str:
    """Render as ``"p/q"`` (or ``"p"`` for integers)."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
