"""Exact equilibrium verification, exhaustive enumeration and PoA/PoS reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import NamedTuple, Optional

from . import core
from .dynamics import SwapMove
from .model import GameSpec, Profile, format_rational, validate_profile


def is_swap_equilibrium(game: GameSpec, p: Profile) -> tuple[bool, Optional[SwapMove]]:
    """(is SE, first profitable swap in lexicographic order if any)."""
    validate_profile(game, p)
    ce = core.find_counterexample(game, p)
    return (True, None) if ce is None else (False, SwapMove(*ce))


def optimal_doi(game: GameSpec, budget: Optional[int] = None) -> tuple[int, Profile]:
    """Exhaustive DoI maximum; early exit at the (Delta+1)b ceiling."""
    return core.max_doi_game(game, budget=budget)


class BoundCheck(NamedTuple):
    name: str
    bound: str
    satisfied: bool


@dataclass
class AnalysisReport:
    n: int
    b: int
    peak: Fraction
    profiles: int
    se_exists: bool
    se_count: int
    min_se_doi: Optional[int]
    max_se_doi: Optional[int]
    opt_doi: int
    min_se: Optional[Profile]
    max_se: Optional[Profile]
    opt: Profile
    se_both_colors_segregated: int
    bound_checks: list[BoundCheck] = field(default_factory=list)

    @property
    def poa(self) -> Optional[Fraction]:
        if not self.se_exists:
            return None
        return Fraction(self.opt_doi, self.min_se_doi)

    @property
    def pos(self) -> Optional[Fraction]:
        if not self.se_exists:
            return None
        return Fraction(self.opt_doi, self.max_se_doi)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "peak": format_rational(self.peak),
            "profiles": self.profiles,
            "se_exists": self.se_exists,
            "se_count": self.se_count,
            "min_se_doi": self.min_se_doi,
            "max_se_doi": self.max_se_doi,
            "opt_doi": self.opt_doi,
            "poa": format_rational(self.poa) if self.poa is not None else None,
            "pos": format_rational(self.pos) if self.pos is not None else None,
            "min_se": list(self.min_se.blue_nodes()) if self.min_se else None,
            "max_se": list(self.max_se.blue_nodes()) if self.max_se else None,
            "opt": list(self.opt.blue_nodes()),
            "se_both_colors_segregated": self.se_both_colors_segregated,
            "bound_checks": [
                {"name": c.name, "bound": c.bound, "satisfied": c.satisfied}
                for c in self.bound_checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def enumerate_equilibria(game: GameSpec, budget: Optional[int] = None,
                         with_bounds: bool = True) -> AnalysisReport:
    """Full sweep: every profile tested for equilibrium; exact report."""
    res = core.sweep_game(game, budget)
    se_exists = res.se_count > 0
    report = AnalysisReport(
        n=game.n,
        b=game.b,
        peak=game.peak,
        profiles=res.profiles,
        se_exists=se_exists,
        se_count=res.se_count,
        min_se_doi=res.min_se_doi if se_exists else None,
        max_se_doi=res.max_se_doi if se_exists else None,
        opt_doi=res.opt_doi,
        min_se=res.min_se,
        max_se=res.max_se,
        opt=res.opt,
        se_both_colors_segregated=res.se_both_colors_segregated,
    )
    if with_bounds:
        report.bound_checks = bound_checks(game, report)
    return report


def bound_checks(game: GameSpec, report: AnalysisReport) -> list[BoundCheck]:
    """Evaluate every applicable theoretical ceiling/floor against the report."""
    checks: list[BoundCheck] = []
    delta_min, delta_max, regular, _ = game.graph.degree_profile()
    n, b = game.n, game.b

    opt_cap = min((delta_max + 1) * b, n)
    checks.append(BoundCheck("opt_doi_ceiling", str(opt_cap),
                             report.opt_doi <= opt_cap))

    if report.se_exists:
        poa_cap = min(Fraction(delta_max),
                      Fraction(n, b + 1),
                      Fraction((delta_max + 1) * b, b + 1))
        checks.append(BoundCheck("poa_general_ceiling", format_rational(poa_cap),
                                 report.poa <= poa_cap))

        if regular and game.peak < Fraction(1, delta_min):
            reg_cap = min(Fraction(delta_min + 1, 2), Fraction(n, 2 * b))
            checks.append(BoundCheck("poa_regular_ceiling", format_rational(reg_cap),
                                     report.poa <= reg_cap))

        floor = max(ceil(Fraction((delta_max + 1) * b, delta_max)), b + 1)
        checks.append(BoundCheck("se_doi_floor", str(floor),
                                 report.min_se_doi >= floor))

        checks.append(BoundCheck("se_one_color_segregation", "0 violations",
                                 report.se_both_colors_segregated == 0))
    return checks
