"""Tunable search bounds, overridable from a config file or CLI flags."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SolverConfig:
    # trial division handles factors up to this bound, rho takes the rest
    trial_division_bound: int = 1_000_000
    # representation targets below this are solved by exhaustive scan
    exhaustive_cutoff: int = 1_000_000
    # f in e^2 - 32 f^2 = l is searched up to pell_multiplier * isqrt(l) + 1
    pell_multiplier: int = 3


DEFAULT_CONFIG = SolverConfig()
