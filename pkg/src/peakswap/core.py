"""Kernel backend selection and the typed wrappers the rest of the package uses.

The hot inner loop (exhaustive sweep over all C(n,b) blue placements with
an equilibrium check per profile) has two interchangeable implementations:
a Cython extension (_fastcore) and a pure-Python twin (_purecore). The
extension is preferred when importable; set PEAKSWAP_PURE_KERNELS=1 to
force the pure backend. Inputs outside the compiled kernel's integer
limits (n > 62, large peak denominators) are routed to the pure backend
per call.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

from . import _purecore
from .graphs import BudgetExceededError
from .model import GameSpec, Profile

try:
    from . import _fastcore
except ImportError:  # extension not built
    _fastcore = None

if os.environ.get("PEAKSWAP_PURE_KERNELS"):
    _fastcore = None

BACKEND = "compiled" if _fastcore is not None else "pure"

# Compiled kernel limits: bitmasks in 64-bit words, score cross-products in
# signed 64-bit. lq <= 2**20 keeps lp*y*lq*y well under 2**63 for y <= 64.
_COMPILED_MAX_N = 62
_COMPILED_MAX_DEN = 1 << 20

DEFAULT_ENUMERATION_BUDGET = int(os.environ.get("PEAKSWAP_ENUM_BUDGET", 10_000_000))


def _backend(game: GameSpec):
    if (
        _fastcore is not None
        and game.n <= _COMPILED_MAX_N
        and game.peak.denominator <= _COMPILED_MAX_DEN
    ):
        return _fastcore
    return _purecore


def _arrays(game: GameSpec):
    g = game.graph
    closed = list(g.closed_masks)
    deg = list(g.degrees)
    edges_u = [e[0] for e in g.edges]
    edges_v = [e[1] for e in g.edges]
    return closed, deg, edges_u, edges_v


def swap_profitable(game: GameSpec, p: Profile, u: int, v: int) -> bool:
    closed, deg, _, _ = _arrays(game)
    return bool(
        _backend(game).swap_profitable(
            closed, deg, game.n, p.blue_mask, u, v,
            game.peak.numerator, game.peak.denominator,
        )
    )


def find_counterexample(game: GameSpec, p: Profile) -> Optional[tuple[int, int]]:
    """First profitable swap in lexicographic (u,v) order, or None (SE)."""
    closed, deg, _, _ = _arrays(game)
    u, v = _backend(game).find_counterexample(
        closed, deg, game.n, p.blue_mask,
        game.peak.numerator, game.peak.denominator,
    )
    return None if u < 0 else (u, v)


@dataclass(frozen=True)
class SweepResult:
    profiles: int
    se_count: int
    min_se_doi: int          # -1 when no SE
    min_se: Optional[Profile]
    max_se_doi: int
    max_se: Optional[Profile]
    opt_doi: int
    opt: Profile
    min_phi: int
    min_phi_profile: Profile
    se_both_colors_segregated: int


def profile_space_size(game: GameSpec) -> int:
    return math.comb(game.n, game.b)


def check_budget(game: GameSpec, budget: Optional[int]) -> None:
    budget = DEFAULT_ENUMERATION_BUDGET if budget is None else budget
    size = profile_space_size(game)
    if size > budget:
        raise BudgetExceededError(
            f"profile space C({game.n},{game.b}) = {size} exceeds budget {budget}"
        )


def sweep_game(game: GameSpec, budget: Optional[int] = None) -> SweepResult:
    """Exhaustive sweep over every blue placement (the hot kernel path)."""
    check_budget(game, budget)
    closed, deg, edges_u, edges_v = _arrays(game)
    res = _backend(game).sweep(
        closed, deg, edges_u, edges_v, game.n, game.b,
        game.peak.numerator, game.peak.denominator,
    )
    (profiles, se_count, min_se_doi, min_se_mask, max_se_doi, max_se_mask,
     opt_doi, opt_mask, min_phi, min_phi_mask, both_seg) = res
    mk = lambda mask: None if mask < 0 else Profile(game.n, mask)
    return SweepResult(
        profiles=profiles,
        se_count=se_count,
        min_se_doi=min_se_doi,
        min_se=mk(min_se_mask),
        max_se_doi=max_se_doi,
        max_se=mk(max_se_mask),
        opt_doi=opt_doi,
        opt=Profile(game.n, opt_mask),
        min_phi=min_phi,
        min_phi_profile=Profile(game.n, min_phi_mask),
        se_both_colors_segregated=both_seg,
    )


def max_doi_game(game: GameSpec, cap: Optional[int] = None,
                 budget: Optional[int] = None) -> tuple[int, Profile]:
    """Exhaustive DoI maximum, early-exiting once the ceiling `cap` is hit."""
    check_budget(game, budget)
    closed, _, edges_u, edges_v = _arrays(game)
    if cap is None:
        _, delta, _, _ = game.graph.degree_profile()
        cap = min((delta + 1) * game.b, game.n)
    best, mask, _ = _backend(game).max_doi(closed, edges_u, edges_v,
                                           game.n, game.b, cap)
    return best, Profile(game.n, mask)
