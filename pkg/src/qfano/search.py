"""Enumeration of numerical Q-Fano candidates of a given index.

The search walks all baskets of indices coprime to q below the terminal-Fano
bound sum(r - 1/r) < 24, all pairing-unit assignments up to sign, and all
A^3 = N / (global index) below the anticanonical-volume bound, keeping the
candidates whose Riemann-Roch values chi(mA) are nonnegative integers over a
full integrality window.  Torsion mode additionally demands a numerically
consistent torsion class: an eligible sub-basket (torsion_basket_check) and
local twists making chi(jT) = 0 and every chi(mA + jT) a nonnegative integer.

The hot loop works over integers: with L = 12 * q * g (g the global index),
L * chi(mA) is an integer for every candidate, so integrality of chi is a
single modular test and no Fraction arithmetic is needed per m.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .basket import Basket, global_index, torsion_basket_check, units_half
from .orbifold_rr import local_contribution
from .ratmod import Rational, format_rational


@dataclass
class SearchConfig:
    q: int
    max_anticanonical_cube: Rational = Fraction(72)  # bound on q^3 A^3
    integrality_span_multiplier: int = 2  # window = mult * lcm(12, g)
    require_dim3A_le: Optional[int] = None
    torsion_order: Optional[int] = None
    superadditivity: bool = True  # h0((a+b)A) >= h0(aA) + h0(bA) - 1
    wide_denominators: bool = False  # A^3 in Z/lcm(12, g) instead of Z/g
    basket_cap: Rational = Fraction(24)
    miyaoka_bound: bool = True  # (-K)^3 <= 3 * (-K).c2
    report_rejections: bool = False
    jobs: int = 1


@dataclass(frozen=True)
class Candidate:
    q: int
    basket: Basket
    A3: Rational
    row: tuple[int, ...]
    genus: int
    torsion_order: int = 1
    tau: Optional[tuple[int, ...]] = None

    def dims(self, upto: int = 6) -> list[int]:
        return [self.row[m] - 1 for m in range(1, upto + 1)]

    def sort_key(self):
        return (self.A3, self.basket.indices(), self.basket.serialize())

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "basket": self.basket.serialize(),
            "A3": format_rational(self.A3),
            "genus": self.genus,
            "dims": self.dims(),
            "torsion": self.torsion_order,
        }


@dataclass(frozen=True)
class Rejection:
    basket: Basket
    A3: Rational
    reason: str
    first_bad_m: Optional[int] = None


def enumerate_baskets(q: int, cap: Rational = Fraction(24)) -> Iterator[tuple[int, ...]]:
    """All index multisets (nondecreasing) with gcd(r, q) = 1 and
    sum(r - 1/r) < cap."""
    max_r = int(cap) + 1
    indices = [r for r in range(2, max_r + 1) if math.gcd(r, q) == 1]
    weights = {r: Fraction(r * r - 1, r) for r in indices}
    indices = [r for r in indices if weights[r] < cap]

    def rec(start: int, remaining: Fraction, prefix: tuple[int, ...]):
        yield prefix
        for idx in range(start, len(indices)):
            r = indices[idx]
            w = weights[r]
            if w >= remaining:
                continue
            yield from rec(idx, remaining - w, prefix + (r,))

    for multiset in rec(0, cap, ()):
        if multiset:
            yield multiset


def pairing_assignments(indices: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """All b-assignments up to sign, with equal indices deduplicated."""
    counted: dict[int, int] = {}
    for r in indices:
        counted[r] = counted.get(r, 0) + 1
    per_index = []
    for r, mult in sorted(counted.items()):
        options = units_half(r)
        per_index.append(
            [
                tuple((r, b) for b in combo)
                for combo in itertools.combinations_with_replacement(options, mult)
            ]
        )
    for chosen in itertools.product(*per_index):
        yield tuple(itertools.chain.from_iterable(chosen))


def admissible_A3(q: int, basket: Basket, config: SearchConfig) -> list[Rational]:
    """Candidate values N / g with q^3 A^3 within the volume bounds.

    Besides the configured cap on the anticanonical volume, terminal Q-Fano
    threefolds satisfy the Kawamata-Miyaoka type inequality
    (-K)^3 <= 3 (-K).c2, which is what keeps the degree search finite in the
    classification literature this search mirrors.
    """
    g = global_index(basket)
    if config.wide_denominators:
        g = math.lcm(12, g)
    bound = config.max_anticanonical_cube
    if config.miyaoka_bound:
        from .basket import kawamata_sum

        bound = min(bound, 3 * (24 - kawamata_sum(basket)))
    nmax = int(bound * g / q**3)
    return [Fraction(n, g) for n in range(1, nmax + 1)]


class _Kernel:
    """Integer-arithmetic chi evaluator for one (basket, b-assignment)."""

    def __init__(self, q: int, points: tuple[tuple[int, int], ...]):
        self.q = q
        self.points = points
        self.g = math.lcm(1, *(r for r, _ in points)) if points else 1
        g = self.g
        self.L = 12 * q * g
        # kawamata numerator: sum (r^2-1) * g / r, so kaw = kawnum / g
        self.kawnum = sum((r * r - 1) * (g // r) for r, _ in points)
        self.c2num = 24 * g - self.kawnum  # -K.c2 = c2num / g
        # local contribution tables: contrib[p][m % r] * (q*g // r) = L * c_P(mA)
        self.ctabs = []
        for r, b in points:
            inv = pow(q, -1, r)
            scale = q * g // r
            tab = []
            for mr in range(r):
                i = (-mr * inv) % r
                c = local_contribution(r, b, i)  # denominator divides 12r
                tab.append(int(c * 12 * r) * scale)
            self.ctabs.append((r, tab))

    def chiL(self, num: int, m: int) -> int:
        """L * chi(mA) for A^3 = num / g; always an integer."""
        q = self.q
        total = self.L + num * q * m * (m + q) * (2 * m + q) + m * self.c2num
        for r, tab in self.ctabs:
            total += tab[m % r]
        return total

    def row_if_valid(self, num: int, span: int, prefix: int = 12):
        """Integer h^0-row through `span` if all chi are nonneg integers,
        else (None, first bad m, reason)."""
        L = self.L
        row = []
        for m in range(min(prefix, span) + 1):
            v = self.chiL(num, m)
            if v % L:
                return None, m, "non-integral chi"
            if v < 0:
                return None, m, "negative chi"
            row.append(v // L)
        for m in range(prefix + 1, span + 1):
            v = self.chiL(num, m)
            if v % L:
                return None, m, "non-integral chi"
            if v < 0:
                return None, m, "negative chi"
            row.append(v // L)
        return row, None, None


def _torsion_twists(points: tuple[tuple[int, int], ...], n: int) -> Iterator[tuple[int, ...]]:
    """Candidate local-eigentype assignments for an n-torsion class.

    Each point of index divisible by n may carry a twist j*r/n; the sub-basket
    of twisted points must satisfy the torsion compatibility rules.  Global
    sign flips (t -> -t everywhere) are deduplicated.
    """
    options = []
    for r, _ in points:
        if r % n == 0:
            options.append([0] + [j * (r // n) for j in range(1, n)])
        else:
            options.append([0])
    seen = set()
    for combo in itertools.product(*options):
        if all(t == 0 for t in combo):
            continue
        neg = tuple((-t) % r for (r, _), t in zip(points, combo))
        key = min(combo, neg)
        if key in seen:
            continue
        seen.add(key)
        yield combo


def _twist_subbasket_ok(points, combo, n) -> bool:
    twisted = sorted(r for (r, _), t in zip(points, combo) if t != 0)
    if not twisted:
        return False
    if n == 7:
        return twisted == [7, 7, 7]
    if n == 5:
        return twisted in ([5, 5, 5, 5], [5, 5, 10], [10, 10])
    total = sum(twisted)
    return total == (18 if n == 3 else 16)


class _TwistedKernel:
    """chi(mA + jT) evaluator sharing the global part with _Kernel."""

    def __init__(self, kernel: _Kernel, twists: tuple[int, ...], n: int):
        self.kernel = kernel
        q, g = kernel.q, kernel.g
        self.ttabs = []
        for (r, b), t in zip(kernel.points, twists):
            inv = pow(q, -1, r)
            scale = q * g // r
            tab = {}
            for j in range(1, n):
                row = []
                for mr in range(r):
                    i = ((-mr * inv) + j * t) % r
                    row.append(int(local_contribution(r, b, i) * 12 * r) * scale)
                tab[j] = row
            self.ttabs.append((r, tab))

    def chiL(self, num: int, m: int, j: int) -> int:
        k = self.kernel
        total = k.L + num * k.q * m * (m + k.q) * (2 * m + k.q) + m * k.c2num
        for r, tab in self.ttabs:
            total += tab[j][m % r]
        return total


def _torsion_consistent(kernel: _Kernel, num: int, n: int, span: int):
    """First twist assignment making every chi(mA + jT) a nonnegative
    integer with chi(jT) = 0 for j != 0, or None."""
    L = kernel.L
    for combo in _torsion_twists(kernel.points, n):
        if not _twist_subbasket_ok(kernel.points, combo, n):
            continue
        tk = _TwistedKernel(kernel, combo, n)
        ok = True
        for j in range(1, n):
            if tk.chiL(num, 0, j) != 0:
                ok = False
                break
            for m in range(1, span + 1):
                v = tk.chiL(num, m, j)
                if v % L or v < 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return combo
    return None


def build_candidate(
    q: int,
    points: tuple[tuple[int, int], ...],
    A3: Rational,
    config: SearchConfig,
) -> Candidate | Rejection:
    """Apply all Riemann-Roch filters to one (basket, b, A^3) triple."""
    basket = Basket.make(points)
    kernel = _Kernel(q, points)
    g = kernel.g
    num = A3.numerator * (g // A3.denominator)
    span = config.integrality_span_multiplier * math.lcm(12, g)
    row, bad_m, reason = kernel.row_if_valid(num, span)
    if row is None:
        return Rejection(basket, A3, reason, bad_m)
    if row[0] != 1:
        return Rejection(basket, A3, "chi(0) != 1")
    if row[q] < 1:
        return Rejection(basket, A3, "empty anticanonical system")
    if config.require_dim3A_le is not None and row[3] - 1 > config.require_dim3A_le:
        return Rejection(basket, A3, "dim|3A| too large")
    if config.superadditivity:
        upto = min(len(row) - 1, 24)
        for a in range(1, upto):
            for b_ in range(a, upto - a + 1):
                if row[a] > 0 and row[b_] > 0 and row[a + b_] < row[a] + row[b_] - 1:
                    return Rejection(basket, A3, "superadditivity", a + b_)
    tau = None
    torsion = 1
    if config.torsion_order:
        n = config.torsion_order
        ok, _witness = torsion_basket_check(basket, n)
        if not ok:
            return Rejection(basket, A3, "no eligible torsion sub-basket")
        tau = _torsion_consistent(kernel, num, n, span)
        if tau is None:
            return Rejection(basket, A3, "no consistent torsion twists")
        torsion = n
    return Candidate(
        q=q,
        basket=basket,
        A3=A3,
        row=tuple(row[: max(q + 7, 13)]),
        genus=row[q] - 2,
        torsion_order=torsion,
        tau=tau,
    )


@dataclass
class SearchResult:
    config: SearchConfig
    rows: list[Candidate] = field(default_factory=list)
    rejections: list[Rejection] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "q": self.config.q,
            "rows": [c.to_json() for c in self.rows],
        }
        return json.dumps(payload, sort_keys=True, indent=1)


def _search_basket(q: int, indices: tuple[int, ...], config: SearchConfig):
    accepted = []
    rejected = []
    if config.torsion_order:
        ok, _ = torsion_basket_check(Basket.from_indices(indices), config.torsion_order)
        if not ok:
            return accepted, rejected
    basket0 = Basket.from_indices(indices)
    a3_list = admissible_A3(q, basket0, config)
    if not a3_list:
        return accepted, rejected
    for points in pairing_assignments(indices):
        for A3 in a3_list:
            out = build_candidate(q, points, A3, config)
            if isinstance(out, Candidate):
                accepted.append(out)
            elif config.report_rejections:
                rejected.append(out)
    return accepted, rejected


def search_q(config: SearchConfig) -> SearchResult:
    """Run the full enumeration; output is canonically sorted and
    deterministic regardless of the worker count."""
    baskets = list(enumerate_baskets(config.q, config.basket_cap))
    result = SearchResult(config)
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            outs = list(
                pool.map(lambda idx: _search_basket(config.q, idx, config), baskets)
            )
    else:
        outs = [_search_basket(config.q, idx, config) for idx in baskets]
    seen: dict[tuple, Candidate] = {}
    for accepted, rejected in outs:
        result.rejections.extend(rejected)
        for cand in accepted:
            # one row per (indices, A3): integrality pins b in the table cases,
            # but guard against listing reflections of the same numerical type
            key = (tuple(cand.basket.indices()), cand.A3, cand.row)
            seen.setdefault(key, cand)
    result.rows = sorted(seen.values(), key=lambda c: c.sort_key())
    return result
