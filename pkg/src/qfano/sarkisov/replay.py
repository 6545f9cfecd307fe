"""Machine replay of the case eliminations behind the link analyses.

Each replay config packages a link scenario (index, mobile system, centers
with their discrepancy candidates and local types) together with the ordered
constraint stack used to eliminate cases.  The generic solver knows only the
arithmetic; every fact imported from rationality criteria or class-group
bookkeeping enters as a named, annotated constraint so traces stay auditable.
The surviving set of each config is pinned by the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .relations import (
    Center,
    Constraint,
    LinkScenario,
    MainSolution,
    SystemSpec,
    build_constraints,
    declared,
    divisorial_relations,
    enumerate_candidates,
    extend_secondary,
    min_s,
    secondary_solvable,
)

F = Fraction


def cyclic_center(name: str, r: int, q: int, alphas=None, span: int = 12) -> Center:
    """Center over a cyclic quotient point: alpha = 1/r and known types
    m_k = k * inv(q, r) mod r for the auxiliary systems."""
    inv = pow(q, -1, r)
    return Center(
        name,
        r,
        tuple(alphas) if alphas else (F(1, r),),
        {k: (k * inv) % r for k in range(1, span + 1)},
    )


def gorenstein_center(cap: int = 4, span: int = 12) -> Center:
    return Center("Gor", 1, tuple(F(k) for k in range(1, cap + 1)),
                  {k: 0 for k in range(1, span + 1)})


@dataclass
class ReplayRun:
    label: str
    scenario: LinkScenario
    constraints: list[Constraint]
    extensions: list[SystemSpec] = field(default_factory=list)
    divisorial_cap: int = 0  # 0: skip the divisorial stage


@dataclass
class Survivor:
    run: str
    solution: MainSolution
    extensions: dict[int, list[tuple[int, Fraction]]] = field(default_factory=dict)
    divisorial: list = field(default_factory=list)

    def key(self):
        s = self.solution
        return (s.qhat, s.alpha, s.e, s.s, s.beta, s.center.name)


@dataclass
class Trace:
    config_id: str
    lines: list[str] = field(default_factory=list)
    survivors: list[Survivor] = field(default_factory=list)

    def render(self) -> str:
        body = "\n".join(self.lines)
        return f"{body}\nSURVIVORS: {len(self.survivors)}"


@dataclass
class ReplayConfig:
    ident: str
    title: str
    runs: list[ReplayRun]


def run_replay(config: ReplayConfig) -> Trace:
    trace = Trace(config.ident)
    for run in config.runs:
        stack = build_constraints(run.scenario, run.constraints)
        for sol in enumerate_candidates(run.scenario):
            verdict = None
            for constraint in stack:
                detail = constraint(sol, run.scenario)
                if detail:
                    verdict = f"KILLED {constraint.ident}: {detail}"
                    break
            trace.lines.append(
                f"{run.label}: {sol.describe()} {verdict or 'SURVIVES'}"
            )
            if verdict:
                continue
            if sol.center.index == 1 and sol.alpha == max(sol.center.alphas):
                trace.lines.append(
                    f"{run.label}: WARNING: survivor at the Gorenstein "
                    f"discrepancy cap alpha={sol.alpha}; raise the cap"
                )
            survivor = Survivor(run.label, sol)
            for spec in run.extensions:
                survivor.extensions[spec.k] = extend_secondary(
                    run.scenario, sol, spec
                )
            if run.divisorial_cap and sol.kind == "birational":
                s_map: dict[int, Optional[int]] = {run.scenario.n: sol.s}
                for spec in run.extensions:
                    opts = survivor.extensions[spec.k]
                    if len({s for s, _ in opts}) == 1:
                        s_map[spec.k] = opts[0][0]
                for k, choices in survivor.extensions.items():
                    if k not in s_map and choices:
                        # at most one s_k is compatible with gamma_k >= 0
                        s_map[k] = max(s for s, _ in choices)
                survivor.divisorial = divisorial_relations(
                    sol.qhat, run.scenario.q, sol.e, s_map, run.divisorial_cap
                )
            trace.survivors.append(survivor)
    trace.survivors.sort(key=Survivor.key)
    return trace


# --------------------------------------------------------------------------
# config library
# --------------------------------------------------------------------------

def _config_lemma_5_4() -> ReplayConfig:
    # index-3 Fano with 3-torsion, B = (2, 3^2, 12), A^3 = 1/4, M = |2A|
    # (pencil).  The class A is 11(-K) locally at the index-12 point, so
    # M has local type 10 there.
    p12 = Center("P12", 12, (F(1, 12),), {k: (11 * k) % 12 for k in range(1, 13)})
    p3 = Center("P3", 3, (F(1, 3), F(2, 3)), None)
    p2 = Center("P2", 2, (F(1, 2),), None)
    scenario = LinkScenario(
        q=3, n=2, dim_m=1, ct_multiple=10,
        centers=[p12, p3, p2, gorenstein_center()],
        torsion_free=False,
        label="q=3 torsion Z/3, B=(2,3^2,12)",
    )
    constraints = [
        min_s({4: 2, 6: 4},
              "a pencil on the source gives p_s >= 2 on the target: "
              "s >= 2 once qhat >= 4, s >= 4 once qhat >= 6"),
    ]
    return ReplayConfig("lemma-5.4", "index-3 threefold with Z/3 torsion",
                        [ReplayRun("r12", scenario, constraints)])


def _config_lemma_5_5() -> ReplayConfig:
    # q = 5, A^3 = 1/18, B = (2, 9^2); M = |4A| is a pencil and the index-9
    # points may merge into one cA/9 point, so alpha in {1/9, 2/9}.
    p9 = cyclic_center("P9", 9, 5, alphas=(F(1, 9), F(2, 9)))
    scenario = LinkScenario(
        q=5, n=4, dim_m=1, ct_multiple=8,
        centers=[p9, cyclic_center("P2", 2, 5), gorenstein_center()],
        label="q=5, B=(2,9^2), M=|4A|",
    )
    constraints = [
        min_s({4: 2, 6: 4},
              "p_s >= 2 on the target: s >= 2 at qhat >= 4, s >= 4 at qhat >= 6"),
        secondary_solvable(SystemSpec(1, dim=0)),
    ]
    return ReplayConfig(
        "lemma-5.5", "index-5 threefold with A^3 = 1/18",
        [ReplayRun("main", scenario, constraints, extensions=[SystemSpec(1, dim=0)])],
    )


def _config_lemma_5_8() -> ReplayConfig:
    # q = 7, A^3 = 1/30, B = (2, 6, 10); M = |6A| with dim 4; 6 M_1 in M.
    p10 = cyclic_center("P10", 10, 7)
    scenario = LinkScenario(
        q=7, n=6, dim_m=4, ct_multiple=8,
        centers=[p10, cyclic_center("P6", 6, 7), cyclic_center("P2", 2, 7),
                 gorenstein_center()],
        label="q=7, B=(2,6,10), M=|6A|",
    )

    def pencil_bound(sol, ext):
        s1, b1 = ext
        return 6 * b1 < sol.beta

    def torsion_pivot(sol):
        # surviving shape qhat = 2e with s1 = 0 forced: for e = 2 the
        # class-group order d/e = 1/2 is impossible, so the source carries
        # 2-torsion; the pencil |3A + T| then satisfies 5 s' + l = 9 with
        # beta' = l/10 > 0, forcing s' = 1 and p_1(target) >= 2 at qhat = 4.
        if sol.center.name == "P10" and sol.qhat == 4 and sol.e == 2:
            spec = SystemSpec(3, dim=1, local_m=None, positive_beta=True,
                              label="|3A+T|")
            sols = extend_secondary(_L58[0], sol, spec)
            if all(s == 1 for s, _ in sols):
                return "2-torsion pencil |3A+T| forces s'=1, p1 >= 2 at qhat 4"
        return None

    constraints = [
        min_s({2: 2, 6: 4},
              "dim M = 4 gives p_s >= 5 on the target: s = 1 is impossible, "
              "and s <= 3 is impossible once qhat >= 6"),
        secondary_solvable(
            SystemSpec(1, dim=0), post=pencil_bound,
            post_note="6 M_1 in M forces 6 beta_1 >= beta",
        ),
        declared("torsion-2-pencil",
                 "class-group pivot: d/e = 1/2 is impossible", torsion_pivot),
    ]
    _L58.append(scenario)
    return ReplayConfig("lemma-5.8", "index-7 threefold with A^3 = 1/30",
                        [ReplayRun("main", scenario, constraints)])


_L58: list[LinkScenario] = []


def _config_prop_5_7() -> ReplayConfig:
    # q = 5 with 2-torsion: the two numerical types B = (4^2, 12) and
    # B = (2, 4, 14), both with M = |4A|.
    runs = []

    # -- B = (4^2, 12): dim M = 3, T ~ 6(-K) and |3A + T| ~ 9(-K) at P12.
    p12 = cyclic_center("P12", 12, 5)
    p4 = Center("P4", 4, (F(1, 4), F(1, 2)),
                {k: (k * pow(5, -1, 4)) % 4 for k in range(1, 13)})
    sc12 = LinkScenario(
        q=5, n=4, dim_m=3, ct_multiple=8,
        centers=[p12, p4, gorenstein_center()],
        label="B=(4^2,12)",
    )
    tor12 = SystemSpec(3, dim=1, local_m=9, label="|3A+T|")
    cons12 = [
        min_s({2: 2, 6: 4},
              "dim M = 3 gives p_s >= 4: s = 1 is impossible, s <= 3 "
              "impossible once qhat >= 6"),
        secondary_solvable(
            tor12,
            post=lambda sol, ext: ext[0] == 1 and sol.qhat >= 4,
            post_note="|3A+T| forces s' = 1, hence p1 >= 2 at qhat >= 4",
        ),
    ]
    runs.append(ReplayRun("r12", sc12, cons12, extensions=[tor12]))

    # -- B = (2, 4, 14): dim M = 1, T ~ 7(-K) and |4A + T| ~ 5(-K) at P14.
    p14 = cyclic_center("P14", 14, 5)
    sc14 = LinkScenario(
        q=5, n=4, dim_m=1, ct_multiple=12,
        centers=[p14, cyclic_center("P4", 4, 5), cyclic_center("P2", 2, 5),
                 gorenstein_center()],
        label="B=(2,4,14)",
    )
    tor14 = SystemSpec(4, dim=1, local_m=5, label="|4A+T|")

    def dichotomy(sol):
        # Every remaining candidate: either the target has torsion, so its
        # p_3 >= 2 kills it for qhat >= 6, or it is torsion free, so the
        # source torsion forces d = e/2 = 1, s_1 = 0, and the k = 1 relation
        # must be solvable with s_1 = 0.
        if sol.qhat < 6:
            return None  # the torsion horn has no criterion below index 6
        ext = extend_secondary(sc14, sol, SystemSpec(1, dim=0))
        if not any(s == 0 for s, _ in ext):
            return ("either a torsion target (p3 >= 2, rational at qhat >= 6) "
                    "or d = 1 with no s1 = 0 solution")
        return None

    cons14 = [
        declared("vertical-pencil-identity",
                 "a fiber-type target over P^1 would carry two distinct "
                 "vertical pencils |4A| and |4A+T| inducing the same pencil",
                 lambda sol: sol.qhat == 1),
        min_s({4: 2, 6: 4}, "p_s >= 2 on the target: s >= 2 at qhat >= 4"),
        secondary_solvable(tor14),
        declared("torsion-dichotomy", "class-group dichotomy", dichotomy),
    ]
    runs.append(ReplayRun("r14", sc14, cons14, extensions=[tor14]))
    return ReplayConfig("prop-5.7", "index >= 5 with torsion is rational", runs)


def _config_prop_6_2() -> ReplayConfig:
    # q = 5, B = (2^2, 3, 4), A^3 = 1/12; M = |3A| is a net (dim 2).
    scenario = LinkScenario(
        q=5, n=3, dim_m=2, ct_multiple=3,
        centers=[cyclic_center("P4", 4, 5), cyclic_center("P3", 3, 5),
                 cyclic_center("P2", 2, 5), gorenstein_center()],
        label="q=5, B=(2^2,3,4), M=|3A|",
    )
    constraints = [
        min_s({3: 2, 5: 3, 6: 4},
              "dim M = 2 gives p_s >= 3: s = 1 impossible at qhat >= 3, "
              "s = 2 at qhat >= 5, s = 3 at qhat >= 6"),
        secondary_solvable(SystemSpec(2, dim=1)),
    ]
    return ReplayConfig(
        "prop-6.2", "the net |3A| induces a fibration",
        [ReplayRun("main", scenario, constraints,
                   extensions=[SystemSpec(2, dim=1)])],
    )


def _config_prop_7_1() -> ReplayConfig:
    # q = 7, B = (2, 3, 13): M = |6A| pencil, 6 M_1 in M.
    scenario = LinkScenario(
        q=7, n=6, dim_m=1, ct_multiple=12,
        centers=[cyclic_center("P13", 13, 7), cyclic_center("P3", 3, 7),
                 cyclic_center("P2", 2, 7), gorenstein_center()],
        label="q=7, B=(2,3,13), M=|6A|",
    )

    def pencil_bound(sol, ext):
        s1, b1 = ext
        return 6 * b1 < sol.beta

    constraints = [
        declared("dp6-fibration",
                 "a fiber-type target is a degree-6 del Pezzo fibration or a "
                 "conic bundle whose pushed-down pencils conflict; both are "
                 "rational", lambda sol: sol.qhat == 1),
        min_s({4: 2, 6: 4}, "p_s >= 2 on the target"),
        secondary_solvable(
            SystemSpec(1, dim=0), post=pencil_bound,
            post_note="6 M_1 in M forces 6 beta_1 >= beta",
        ),
    ]
    return ReplayConfig("prop-7.1-2-3-13", "index 7 with B=(2,3,13)",
                        [ReplayRun("main", scenario, constraints)])


def _config_prop_7_2() -> ReplayConfig:
    # q = 6: the three numerical types, all with M = |5A| a pencil.
    runs = []
    cases = {
        "B=(5,17)": (15, [cyclic_center("P17", 17, 6), cyclic_center("P5", 5, 6)],
                     "a degree-5 multiple fiber forces a rational del Pezzo "
                     "fibration; a surface base contradicts N ~ 5 N_1"),
        "B=(7,11)": (10, [cyclic_center("P11", 11, 6), cyclic_center("P7", 7, 6)],
                     "vertical M_2, M_3 push down to N_2 ~ N_3 on a surface "
                     "base; a P^1 base makes multiple fibers conflict"),
        "B=(5,11)": (10, [cyclic_center("P11", 11, 6), cyclic_center("P5", 5, 6)],
                     "a degree-5 multiple fiber forces a rational del Pezzo "
                     "fibration; a surface base contradicts N ~ 5 N_1"),
    }
    for label, (ct, centers, fib_note) in cases.items():
        scenario = LinkScenario(
            q=6, n=5, dim_m=1, ct_multiple=ct,
            centers=centers + [gorenstein_center()],
            label=f"q=6, {label}, M=|5A|",
        )
        constraints = [
            declared("fibration-analysis", fib_note, lambda sol: sol.qhat == 1),
            min_s({4: 2, 6: 4}, "p_s >= 2 on the target"),
            declared("index-7-effective-A",
                     "e = 1 makes the pushed-down divisor an effective "
                     "fundamental class, so an index-7 target is rational",
                     lambda sol: sol.qhat == 7 and sol.e == 1),
        ]
        if label == "B=(7,11)":
            constraints.append(declared(
                "degree-10-target",
                "s = 2 at qhat = 5 puts the target in the torsion-free "
                "double-cover family, so d = e = 1 would make A effective "
                "on the source, which has |A| empty",
                lambda sol: sol.qhat == 5 and sol.s == 2 and sol.e == 1))
        runs.append(ReplayRun(label, scenario, constraints))
    return ReplayConfig("prop-7.2", "every index-6 threefold is rational", runs)


def _config_prop_8_2() -> ReplayConfig:
    # q = 7, B = (2^3, 3, 4, 5): M = |4A| pencil.
    scenario = LinkScenario(
        q=7, n=4, dim_m=1, ct_multiple=2,
        centers=[cyclic_center("P5", 5, 7), cyclic_center("P4", 4, 7),
                 cyclic_center("P3", 3, 7),
                 Center("P2", 2, (F(1, 2), F(3, 2)),
                        {k: k % 2 for k in range(1, 13)}),
                 gorenstein_center()],
        label="q=7, B=(2^3,3,4,5), M=|4A|",
    )
    ext = [SystemSpec(2, dim=0), SystemSpec(3, dim=0), SystemSpec(5, dim=1),
           SystemSpec(6, dim=2)]
    constraints = [
        min_s({4: 2, 6: 4}, "p_s >= 2 on the target"),
        declared("index-3-torsion",
                 "s = 1 at qhat = 3 gives p1 >= 2, so the target class group "
                 "is torsion free and e > 1",
                 lambda sol: sol.qhat == 3 and sol.s == 1 and sol.e == 1),
        declared("unique-fundamental-divisor",
                 "at qhat = 4 with e = 1 the target carries a unique "
                 "effective divisor in the fundamental class, but E-hat and "
                 "one of M2-hat, M3-hat would both realize it",
                 lambda sol: sol.qhat == 4 and sol.e == 1),
        declared("degree-10-target",
                 "s = 2 at qhat = 5 puts the target in the torsion-free "
                 "double-cover family; |A| empty forces e = d >= 2",
                 lambda sol: sol.qhat == 5 and sol.s == 2 and sol.e == 1),
    ] + [secondary_solvable(s) for s in ext]
    return ReplayConfig(
        "prop-8.2", "index 7 with B=(2^3,3,4,5)",
        [ReplayRun("main", scenario, constraints, extensions=ext,
                   divisorial_cap=8)],
    )


def _config_prop_8_4() -> ReplayConfig:
    # q = 7, B = (3, 8, 9): M = |6A| pencil.
    scenario = LinkScenario(
        q=7, n=6, dim_m=1, ct_multiple=6,
        centers=[cyclic_center("P9", 9, 7), cyclic_center("P8", 8, 7),
                 cyclic_center("P3", 3, 7), gorenstein_center()],
        label="q=7, B=(3,8,9), M=|6A|",
    )
    ext = [SystemSpec(3, dim=0), SystemSpec(4, dim=0), SystemSpec(5, dim=1)]
    constraints = [
        min_s({4: 2, 6: 4}, "p_s >= 2 on the target"),
        declared("index-3-torsion",
                 "e = 1 with |A| = |2A| empty gives the target class group "
                 "order d >= 3, hence a rational target at qhat = 3",
                 lambda sol: sol.qhat == 3 and sol.e == 1),
        declared("index-6-rational", "index-6 targets are rational",
                 lambda sol: sol.qhat == 6),
        declared("degree-10-target",
                 "s = 2 at qhat = 5: torsion-free double-cover target with "
                 "|A| = |2A| empty forces e = d >= 3",
                 lambda sol: sol.qhat == 5 and sol.s == 2 and sol.e <= 2),
    ] + [secondary_solvable(s) for s in ext]
    return ReplayConfig(
        "prop-8.4", "index 7 with B=(3,8,9)",
        [ReplayRun("main", scenario, constraints, extensions=ext,
                   divisorial_cap=8)],
    )


def _config_prop_8_5() -> ReplayConfig:
    # q = 7, B = (2^3, 5, 8): M = |4A| pencil.
    scenario = LinkScenario(
        q=7, n=4, dim_m=1, ct_multiple=4,
        centers=[cyclic_center("P8", 8, 7), cyclic_center("P5", 5, 7),
                 Center("P2", 2, (F(1, 2), F(3, 2)),
                        {k: k % 2 for k in range(1, 13)}),
                 gorenstein_center()],
        label="q=7, B=(2^3,5,8), M=|4A|",
    )
    ext = [SystemSpec(2, dim=0), SystemSpec(3, dim=0), SystemSpec(5, dim=1),
           SystemSpec(6, dim=2)]
    constraints = [
        min_s({4: 2, 6: 4}, "p_s >= 2 on the target"),
        declared("degree-10-target",
                 "s = 2 at qhat = 5: torsion-free double-cover target with "
                 "|A| empty forces e = d >= 2",
                 lambda sol: sol.qhat == 5 and sol.s == 2 and sol.e == 1),
    ] + [secondary_solvable(s) for s in ext]
    return ReplayConfig(
        "prop-8.5", "index 7 with B=(2^3,5,8)",
        [ReplayRun("main", scenario, constraints, extensions=ext,
                   divisorial_cap=8)],
    )


def _config_lemma_9_1() -> ReplayConfig:
    # q = 7, B = (2^3, 3, 4, 5) again, now with M = |5A| (a pencil); the
    # index-5 point is outside the base locus, so it is not a center.
    scenario = LinkScenario(
        q=7, n=5, dim_m=1, ct_multiple=3,
        centers=[cyclic_center("P4", 4, 7), cyclic_center("P3", 3, 7),
                 Center("P2", 2, (F(1, 2), F(3, 2)),
                        {k: k % 2 for k in range(1, 13)}),
                 gorenstein_center()],
        label="q=7, B=(2^3,3,4,5), M=|5A|",
    )
    ext = [SystemSpec(2, dim=0), SystemSpec(3, dim=0), SystemSpec(4, dim=1),
           SystemSpec(6, dim=2)]

    def e1_torsion(sol):
        if sol.e != 1:
            return None
        if sol.qhat >= 5:
            return "e = 1 gives a torsion target; index >= 5 with torsion is rational"
        if sol.qhat >= 3 and sol.s == 1:
            return "e = 1 gives a torsion target with p1 >= 2: rational"
        return None

    constraints = [
        min_s({4: 2, 6: 4}, "p_s >= 2 on the target"),
        declared("e1-torsion-target",
                 "|A| empty and e = 1 force class-group torsion of order "
                 "d >= 2 on the target", e1_torsion),
    ] + [secondary_solvable(s) for s in ext]
    return ReplayConfig(
        "lemma-9.1", "the |5A| link contracts the unique M_2",
        [ReplayRun("main", scenario, constraints, extensions=ext,
                   divisorial_cap=8)],
    )


def _config_lemma_9_2() -> ReplayConfig:
    # q = 7, B = (2^3, 3, 4, 5); M is the subsystem of |6A| through the
    # index-3 point, dim M >= 1.  At P3 the local type of M is unknown.
    p3 = Center("P3", 3, (F(1, 3),),
                {k: (k * pow(7, -1, 3)) % 3 for k in range(1, 13)}, main_m=None)
    scenario = LinkScenario(
        q=7, n=6, dim_m=1, ct_multiple=3,
        centers=[p3, cyclic_center("P4", 4, 7), cyclic_center("P5", 5, 7),
                 Center("P2", 2, (F(1, 2), F(3, 2)),
                        {k: k % 2 for k in range(1, 13)}),
                 gorenstein_center()],
        label="q=7, B=(2^3,3,4,5), M = |6A| through P3",
    )
    ext = [SystemSpec(2, dim=0), SystemSpec(3, dim=0)]

    def e1_torsion(sol):
        if sol.e != 1:
            return None
        if sol.qhat >= 5:
            return "e = 1 gives a torsion target; index >= 5 with torsion is rational"
        if sol.qhat == 4:
            return ("beta_2 < 1 forces s_2 > 0, so the target class-group "
                    "order is d >= 3: rational")
        if sol.qhat == 3 and sol.s == 1:
            return "e = 1 gives a torsion target with p1 >= 2: rational"
        return None

    constraints = [
        min_s({4: 2}, "p_s >= 2 on the target"),
        declared("e1-torsion-target",
                 "|A| empty and e = 1 force class-group torsion on the target",
                 e1_torsion),
        declared("index-6-rational", "index-6 targets are rational",
                 lambda sol: sol.qhat == 6),
        declared("crepant-center-switch",
                 "threshold 1/3 is reached at the index-3 point as well; the "
                 "link recenters there",
                 lambda sol: sol.center.name == "P5" and sol.qhat == 5
                 and sol.e == 3),
    ] + [secondary_solvable(s) for s in ext]
    return ReplayConfig(
        "lemma-9.2", "links centered at the index-3 point",
        [ReplayRun("main", scenario, constraints, extensions=ext)],
    )


_BUILDERS = (
    _config_lemma_5_4,
    _config_lemma_5_5,
    _config_lemma_5_8,
    _config_prop_5_7,
    _config_prop_6_2,
    _config_prop_7_1,
    _config_prop_7_2,
    _config_prop_8_2,
    _config_prop_8_4,
    _config_prop_8_5,
    _config_lemma_9_1,
    _config_lemma_9_2,
)


def library() -> dict[str, ReplayConfig]:
    return {cfg.ident: cfg for cfg in (b() for b in _BUILDERS)}


def replay(config_id: str) -> Trace:
    configs = library()
    key = config_id.replace("_", "-")
    if key not in configs:
        # tolerate dots vs dashes in ids: lemma-5.5 == lemma-5-5
        alt = {k.replace(".", "-"): k for k in configs}
        if key.replace(".", "-") in alt:
            key = alt[key.replace(".", "-")]
        else:
            raise KeyError(
                f"unknown replay id {config_id!r}; known: {sorted(configs)}"
            )
    return run_replay(configs[key])
