"""Numerical Sarkisov-link machinery.

A two-ray link out of a Q-Fano threefold X of index q, run on a mobile
system M ~ nA (n < q), is governed by exact integer/rational relations in
the extremal data (alpha, beta, e, s, qhat) together with per-center lattice
and congruence conditions:

    n qhat = q s + (q beta - n alpha) e,        q beta - n alpha >= alpha > 0
    k qhat = q s_k + (q beta_k - k alpha) e     for the auxiliary |kA|
    b e = qhat delta - q,   e gamma_k = s_k delta - k   (divisorial case)

If M ~ m(-K) locally at the blown-up point of index r, then beta is
congruent to m alpha mod Z and lies in (1/r)Z; the canonical threshold bound
gives beta >= m alpha for the largest such m over the points where M fails
to be Cartier.  All solution sets are finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, Optional, Sequence

from ..basket import SingularPointSpec
from ..ratmod import Rational, format_rational

DEFAULT_QHAT_DOMAIN = (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 17, 19)


class ScenarioError(ValueError):
    """Ill-posed link scenario."""


@dataclass(frozen=True)
class Center:
    """A potential blowup center: its index, discrepancy candidates and the
    local types m_k of the auxiliary systems kA (None when unknown)."""

    name: str
    index: int
    alphas: tuple[Rational, ...]
    local_types: Optional[dict[int, int]] = None
    main_m: Optional[int] = -1  # -1: derive from local_types; None: unknown

    def m_for(self, k: int) -> Optional[int]:
        if self.local_types is None:
            return None
        return self.local_types.get(k)


@dataclass(frozen=True)
class SystemSpec:
    """An auxiliary linear system for the secondary relation."""

    k: int
    dim: Optional[int] = None
    local_m: Optional[int] = -1  # -1: derive from the center; None: unknown
    integral_beta: bool = False  # beta_k known to be an integer
    positive_beta: bool = False  # the class is not Cartier at the center
    label: str = ""

    def name(self) -> str:
        return self.label or f"|{self.k}A|"


@dataclass
class LinkScenario:
    q: int
    n: int
    dim_m: int
    ct_multiple: int  # beta >= ct_multiple * alpha (canonical threshold)
    centers: list[Center]
    torsion_free: bool = True
    qhat_domain: tuple[int, ...] = DEFAULT_QHAT_DOMAIN
    known_dims: dict[int, int] = field(default_factory=dict)
    secondary: list[SystemSpec] = field(default_factory=list)
    not_rational: bool = True  # the source variety is assumed nonrational
    label: str = ""

    def __post_init__(self) -> None:
        if not 0 < self.n < self.q:
            raise ScenarioError("need 0 < n < q for the mobile system")
        if not self.centers:
            raise ScenarioError("empty discrepancy-candidate set")


@dataclass(frozen=True)
class MainSolution:
    center: Center
    alpha: Rational
    qhat: int
    s: int
    e: int
    beta: Rational

    @property
    def kind(self) -> str:
        return "fibration" if self.s == 0 and self.qhat == 1 else "birational"

    def describe(self) -> str:
        return (
            f"center={self.center.name} alpha={format_rational(self.alpha)} "
            f"qhat={self.qhat} s={self.s} e={self.e} beta={format_rational(self.beta)}"
        )


def enumerate_candidates(scenario: LinkScenario) -> Iterator[MainSolution]:
    """All tuples satisfying the main relation with q beta - n alpha >= alpha.

    Finite: s <= n qhat / q and e <= (n qhat - q s) / alpha.
    """
    q, n = scenario.q, scenario.n
    for qhat in scenario.qhat_domain:
        for s in range(n * qhat // q + 1):
            T = n * qhat - q * s  # (q beta - n alpha) e
            if T <= 0:
                continue
            for center in scenario.centers:
                for alpha in center.alphas:
                    e_max = int(Fraction(T) / alpha)
                    for e in range(1, e_max + 1):
                        beta = (Fraction(T, e) + n * alpha) / q
                        yield MainSolution(center, alpha, qhat, s, e, beta)


@dataclass(frozen=True)
class Constraint:
    """A named kill-test: returns a detail string when the candidate dies."""

    ident: str
    note: str
    test: Callable[[MainSolution, "LinkScenario"], Optional[str]]

    def __call__(self, sol: MainSolution, scenario: LinkScenario) -> Optional[str]:
        return self.test(sol, scenario)


def _in_lattice(x: Rational, r: int) -> bool:
    return (x * r).denominator == 1


def ct_bound() -> Constraint:
    def test(sol, sc):
        if sol.beta < sc.ct_multiple * sol.alpha:
            return f"beta={format_rational(sol.beta)} < {sc.ct_multiple}*alpha"
        return None

    return Constraint("ct-bound", "canonical threshold: beta >= m*alpha", test)


def beta_lattice() -> Constraint:
    def test(sol, sc):
        if not _in_lattice(sol.beta, sol.center.index):
            return (
                f"beta={format_rational(sol.beta)} not in "
                f"(1/{sol.center.index})Z"
            )
        return None

    return Constraint("beta-lattice", "beta lies in (1/r)Z over an index-r center", test)


def beta_congruence() -> Constraint:
    def test(sol, sc):
        m = sol.center.main_m
        if m == -1:
            m = sol.center.m_for(sc.n)
        if m is None:
            return None
        if (sol.beta - m * sol.alpha).denominator != 1:
            return (
                f"beta={format_rational(sol.beta)} != {m}*alpha mod Z"
            )
        return None

    return Constraint(
        "beta-congruence", "beta = m*alpha mod Z when M ~ m(-K) at the center", test
    )


def torsion_free_step() -> Constraint:
    def test(sol, sc):
        if not sc.torsion_free:
            return None
        step = sc.q * sol.beta - sc.n * sol.alpha
        if step.denominator != 1:
            return f"q*beta - n*alpha = {format_rational(step)} not an integer"
        return None

    return Constraint(
        "class-step-integral",
        "q beta - n alpha is a positive integer when Cl has no torsion",
        test,
    )


def qhat_cap(cap: int = 7) -> Constraint:
    def test(sol, sc):
        if sc.not_rational and sol.qhat > cap:
            return f"qhat={sol.qhat} > {cap}"
        return None

    return Constraint(
        "qhat-cap", "targets of index >= 8 are rational; the source is not", test
    )


def fibration_rule() -> Constraint:
    def test(sol, sc):
        if sc.not_rational and sol.s == 0 and sol.qhat != 1:
            return f"s=0 forces a fibration, and nonrational fibrations have qhat=1"
        return None

    return Constraint(
        "fibration-qhat-1", "a nonrational Mori fiber target has fiber index 1", test
    )


def min_s(table: dict[int, int], note: str) -> Constraint:
    ordered = sorted(table.items())

    def test(sol, sc):
        if not sc.not_rational or sol.s == 0:
            return None
        need = 1
        for threshold, lo in ordered:
            if sol.qhat >= threshold:
                need = max(need, lo)
        if sol.s < need:
            return f"s={sol.s} < {need} required at qhat={sol.qhat}"
        return None

    return Constraint("min-s", note, test)


def declared(ident: str, note: str, predicate) -> Constraint:
    def test(sol, sc):
        detail = predicate(sol)
        if detail:
            return detail if isinstance(detail, str) else note
        return None

    return Constraint(ident, note, test)


STANDARD_CONSTRAINTS: tuple[Callable[[], Constraint], ...] = (
    ct_bound,
    beta_lattice,
    beta_congruence,
    torsion_free_step,
    qhat_cap,
    fibration_rule,
)


def extend_secondary(
    scenario: LinkScenario, sol: MainSolution, spec: SystemSpec
) -> list[tuple[int, Rational]]:
    """All (s_k, beta_k) solving the auxiliary relation for the system kA.

    Applies the lattice/congruence at the blowup center, beta_k >= 0, and,
    for birational links, s_k >= 1 whenever the system moves (dim >= 1).
    """
    q, e, alpha = scenario.q, sol.e, sol.alpha
    k = spec.k
    out: list[tuple[int, Rational]] = []
    m = spec.local_m
    if m == -1:
        m = sol.center.m_for(k)
    s_cap = int((k * sol.qhat + k * alpha * e) / q) + 1
    for s_k in range(s_cap + 1):
        beta_k = (Fraction(k * sol.qhat - q * s_k, e) + k * alpha) / q
        if beta_k < 0:
            continue
        if spec.positive_beta and beta_k == 0:
            continue
        if spec.integral_beta:
            if beta_k.denominator != 1:
                continue
        elif not _in_lattice(beta_k, sol.center.index):
            continue
        if m is not None and (beta_k - m * alpha).denominator != 1:
            continue
        if (
            sol.kind == "birational"
            and spec.dim is not None
            and spec.dim >= 1
            and s_k == 0
        ):
            continue  # a moving system cannot map to the contracted divisor
        out.append((s_k, beta_k))
    return out


def secondary_solvable(spec: SystemSpec, post=None, post_note: str = "") -> Constraint:
    """Kill candidates for which the auxiliary relation has no solution
    (or whose solutions all trip the optional post-test)."""

    def test(sol, sc):
        sols = extend_secondary(sc, sol, spec)
        if not sols:
            return f"no admissible (s_k, beta_k) for {spec.name()}"
        if post is not None:
            keep = [x for x in sols if not post(sol, x)]
            if not keep:
                return post_note or f"every {spec.name()} solution is inconsistent"
        return None

    return Constraint(
        f"system-{spec.name()}",
        f"the auxiliary relation for {spec.name()} must be solvable",
        test,
    )


def solve_main(scenario: LinkScenario, constraints: Sequence[Constraint] | None = None):
    """Survivors of the scenario's constraint stack, in enumeration order."""
    if constraints is None:
        constraints = build_constraints(scenario)
    out = []
    for sol in enumerate_candidates(scenario):
        if not any(c(sol, scenario) for c in constraints):
            out.append(sol)
    return out


def build_constraints(
    scenario: LinkScenario, extra: Sequence[Constraint] = ()
) -> list[Constraint]:
    base = [factory() for factory in STANDARD_CONSTRAINTS]
    return base + list(extra)


def divisorial_relations(
    qhat: int,
    q: int,
    e: int,
    s_map: dict[int, Optional[int]],
    delta_cap: int = 12,
) -> list[tuple[int, int, dict[int, Optional[int]]]]:
    """All (delta, b, gamma_k) with b e = qhat delta - q and
    e gamma_k = s_k delta - k, requiring b >= 1 and gamma_k >= 0 integers.

    Entries of ``s_map`` with s_k = 0 are the contracted-divisor degeneracy;
    their gamma is reported as None (no relation applies).
    """
    out = []
    for delta in range(1, delta_cap + 1):
        num = qhat * delta - q
        if num <= 0 or num % e:
            continue
        b = num // e
        gammas: dict[int, Optional[int]] = {}
        ok = True
        for k, s_k in sorted(s_map.items()):
            if s_k == 0 or s_k is None:
                gammas[k] = None
                continue
            gnum = s_k * delta - k
            if gnum < 0 or gnum % e:
                ok = False
                break
            gammas[k] = gnum // e
        if ok:
            out.append((delta, b, gammas))
    return out


def kawamata_E3(r: int, a: int) -> Rational:
    """E^3 for the minimal-discrepancy blowup of a 1/r(1, a, r-a) point."""
    if not (0 < a < r) or gcd(a, r) != 1:
        raise ScenarioError(f"invalid quotient type 1/{r}({a})")
    return Fraction(r * r, a * (r - a))


def blowup_triple(
    c1: tuple[Rational, Rational],
    c2: tuple[Rational, Rational],
    c3: tuple[Rational, Rational],
    A3: Rational,
    E3: Rational,
) -> Rational:
    """Triple product of classes a*f^*A - beta*E on a point blowup."""
    return c1[0] * c2[0] * c3[0] * A3 - c1[1] * c2[1] * c3[1] * E3


@dataclass(frozen=True)
class CbInvariants:
    H2: Rational  # A_S^2 on the base surface
    HDelta: Rational  # A_S . discriminant
    q_S: int

    @property
    def discriminant_is_minus_2K(self) -> bool:
        return self.HDelta == 2 * self.q_S * self.H2


def cb_invariants(
    anti_k: tuple[Rational, Rational],
    fiber: tuple[Rational, Rational],
    A3: Rational,
    E3: Rational,
    q_S: int,
) -> CbInvariants:
    """Base-surface invariants of a conic bundle from the blowup lattice.

    ``anti_k`` is the anticanonical class and ``fiber`` the pullback of the
    base polarization, both written as (a, beta) for a f^*A - beta E; then
    -K.F^2 = 2 H^2 and K^2.F = -4 K_S.H - H.Delta with K_S = -q_S H.
    """
    if q_S <= 0:
        raise ScenarioError("base index must be positive")
    H2 = blowup_triple(anti_k, fiber, fiber, A3, E3) / 2
    if H2 <= 0:
        raise ScenarioError(f"degenerate fibration: H^2 = {H2}")
    K2F = blowup_triple(anti_k, anti_k, fiber, A3, E3)
    HDelta = 4 * q_S * H2 - K2F
    return CbInvariants(H2, HDelta, q_S)


def discrepancy_candidates(point: SingularPointSpec, cap: int = 4) -> set[Rational]:
    """Admissible discrepancies alpha of an extremal blowup over the point.

    Cyclic quotients, cAx/4 and the remaining exceptional types only admit
    the minimal discrepancy 1/r; cA/r admits k/r for k dividing the axial
    weight; cD/2 and cE/2 admit k/2 up to a configured cap.  Gorenstein
    centers carry integer discrepancies 1..cap.
    """
    if point.kind == "gorenstein":
        return {Fraction(k) for k in range(1, cap + 1)}
    r = point.r
    if point.kind == "cA/r":
        return {Fraction(k, r) for k in range(1, point.aw + 1) if point.aw % k == 0}
    if point.kind in ("cD/2", "cE/2"):
        return {Fraction(k, 2) for k in range(1, 2 * cap + 1)}
    return {Fraction(1, r)}


RATIONAL = "rational"
OPEN = "open"


def rationality_verdict(
    qhat: int,
    p1: Optional[int] = None,
    p2: Optional[int] = None,
    p3: Optional[int] = None,
    A3: Optional[Rational] = None,
    torsion_order: Optional[int] = None,
) -> str:
    """Combined rationality criteria for a Q-Fano threefold of index qhat.

    Unknown inputs are None; a clause fires only when its inputs are known.
    """
    if qhat >= 8:
        return RATIONAL
    if qhat == 6:
        return RATIONAL
    if p1 is not None:
        if p1 >= 4:
            return RATIONAL
        if qhat >= 3 and p1 >= 3:
            return RATIONAL
        if qhat >= 4 and p1 >= 2:
            return RATIONAL
        if qhat == 7 and p1 > 0:
            return RATIONAL
    if qhat >= 5 and p2 is not None and p2 >= 2 and A3 is not None and A3 != Fraction(1, 12):
        return RATIONAL
    if qhat >= 6 and p3 is not None and p3 >= 2:
        return RATIONAL
    if qhat >= 5 and torsion_order is not None and torsion_order > 1:
        return RATIONAL
    return OPEN
