from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from peakswap import gallery
from peakswap.analysis import (enumerate_equilibria, is_swap_equilibrium,
                               optimal_doi)
from peakswap.graphs import BudgetExceededError
from peakswap.model import GameSpec, Profile, doi

from conftest import (HALF, THIRD, oracle_doi, oracle_is_se, oracle_sweep,
                      profile_of)


def test_is_swap_equilibrium_matches_oracle():
    rng = random.Random(4)
    for g in [gallery.ring(6), gallery.cube(), gallery.complete_bipartite(2, 3)]:
        for lam in [THIRD, HALF, Fraction(2, 3)]:
            game = GameSpec(g, g.n // 2, lam)
            for _ in range(25):
                blue = set(rng.sample(range(g.n), game.b))
                ok, move = is_swap_equilibrium(game, profile_of(blue, g.n))
                assert ok == oracle_is_se(g, blue, lam)
                if move is not None:
                    from conftest import oracle_profitable
                    assert oracle_profitable(g, blue, move.u, move.v, lam)


def test_enumeration_matches_oracle_sweep():
    for g, b, lam in [
        (gallery.ring(6), 3, HALF),
        (gallery.ring(6), 3, Fraction(3, 4)),
        (gallery.complete_bipartite(2, 3), 2, HALF),
        (gallery.path(6), 2, THIRD),
        (gallery.cube(), 3, HALF),
    ]:
        game = GameSpec(g, b, lam)
        report = enumerate_equilibria(game)
        ses, best = oracle_sweep(g, b, lam)
        assert report.se_count == len(ses)
        assert report.se_exists == bool(ses)
        assert report.opt_doi == best
        if ses:
            dois = sorted(oracle_doi(g, set(s)) for s in ses)
            assert report.min_se_doi == dois[0]
            assert report.max_se_doi == dois[-1]
            assert report.poa == Fraction(best, dois[0])
            assert report.pos == Fraction(best, dois[-1])
        else:
            assert report.poa is None and report.pos is None


def test_optimal_doi_matches_enumeration():
    for g, b in [(gallery.ring(6), 2), (gallery.grid(2, 4), 3),
                 (gallery.petersen(), 4)]:
        game = GameSpec(g, b, HALF)
        best, witness = optimal_doi(game)
        assert doi(witness, g) == best
        assert best == enumerate_equilibria(game).opt_doi


def test_budget_enforced():
    game = GameSpec(gallery.petersen(), 5, HALF)  # C(10,5) = 252
    with pytest.raises(BudgetExceededError):
        enumerate_equilibria(game, budget=100)
    enumerate_equilibria(game, budget=252)  # exactly enough


def test_report_json_shape():
    game = GameSpec(gallery.ring(6), 2, HALF)
    doc = json.loads(enumerate_equilibria(game).to_json())
    assert doc["poa"] == "3/2"
    assert doc["pos"] == "1/1"
    assert doc["peak"] == "1/2"
    assert doc["se_both_colors_segregated"] == 0
    assert {c["name"] for c in doc["bound_checks"]} >= {
        "opt_doi_ceiling", "poa_general_ceiling", "se_doi_floor",
        "se_one_color_segregation"}


def test_bound_checks_hold_on_corpus(game_corpus):
    for game in game_corpus:
        report = enumerate_equilibria(game)
        for check in report.bound_checks:
            assert check.satisfied, (game, check)


def test_regular_bound_check_present_only_when_applicable():
    # regular graph, peak < 1/delta
    game = GameSpec(gallery.ring(6), 2, Fraction(1, 3))
    names = [c.name for c in enumerate_equilibria(game).bound_checks]
    assert "poa_regular_ceiling" in names
    # irregular graph: the regular-only ceiling must be absent
    game = GameSpec(gallery.star(5), 2, Fraction(1, 3))
    names = [c.name for c in enumerate_equilibria(game).bound_checks]
    assert "poa_regular_ceiling" not in names
