"""Sarkisov-link arithmetic: relation solving, intersection calculus, replay."""

from .relations import (
    Center,
    CbInvariants,
    LinkScenario,
    MainSolution,
    ScenarioError,
    SystemSpec,
    blowup_triple,
    build_constraints,
    cb_invariants,
    discrepancy_candidates,
    divisorial_relations,
    enumerate_candidates,
    extend_secondary,
    kawamata_E3,
    min_s,
    rationality_verdict,
    solve_main,
)
from .replay import ReplayConfig, Trace, library, replay, run_replay

__all__ = [
    "Center",
    "CbInvariants",
    "LinkScenario",
    "MainSolution",
    "ScenarioError",
    "SystemSpec",
    "blowup_triple",
    "build_constraints",
    "cb_invariants",
    "discrepancy_candidates",
    "divisorial_relations",
    "enumerate_candidates",
    "extend_secondary",
    "kawamata_E3",
    "min_s",
    "rationality_verdict",
    "solve_main",
    "ReplayConfig",
    "Trace",
    "library",
    "replay",
    "run_replay",
]
