"""Every expected value shipped with a generated instance is re-derived here
through the analysis pipeline; generators are never trusted blind."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from peakswap import gallery
from peakswap.analysis import enumerate_equilibria, is_swap_equilibrium, optimal_doi
from peakswap.model import GameSpec, doi

from conftest import HALF, THIRD


def test_stock_graph_shapes():
    assert gallery.ring(6).degree_profile() == (2, 2, True, True)
    assert gallery.cube().degree_profile() == (3, 3, True, True)
    assert gallery.petersen().degree_profile() == (3, 3, True, True)
    assert gallery.clique(5).m == 10
    assert gallery.complete_bipartite(3, 4).m == 12
    assert gallery.grid(3, 3).m == 12
    assert gallery.circulant(8, [1, 3]).degree_profile()[2]
    assert gallery.star(5).n == 6


def test_random_regular_deterministic_and_regular():
    a = gallery.random_regular(10, 3, seed=4)
    b = gallery.random_regular(10, 3, seed=4)
    assert a == b
    assert a.degree_profile() == (3, 3, True, True)
    with pytest.raises(gallery.GeneratorError):
        gallery.random_regular(7, 3, seed=1)  # odd degree sum


def test_random_almost_regular():
    g = gallery.random_almost_regular(10, 3, seed=2)
    lo, hi, regular, almost = g.degree_profile()
    assert (lo, hi, almost) == (3, 4, True)
    assert g == gallery.random_almost_regular(10, 3, seed=2)


def test_no_se_ring():
    for lam in (Fraction(2, 3), Fraction(3, 4)):
        inst = gallery.no_se_ring(lam)
        assert enumerate_equilibria(inst.game).se_exists is False
    with pytest.raises(gallery.GeneratorError):
        gallery.no_se_ring(HALF)


@pytest.mark.parametrize("b,lam", [(2, HALF), (4, HALF), (2, THIRD), (4, THIRD)])
def test_poa_ring_expectations(b, lam):
    inst = gallery.poa_ring_instance(b, lam)
    g = inst.game.graph
    bad, opt = inst.profiles["bad_se"], inst.profiles["optimum"]
    assert doi(bad, g) == inst.expected["bad_se_doi"]
    assert doi(opt, g) == inst.expected["optimum_doi"] == 3 * b
    assert is_swap_equilibrium(inst.game, bad)[0] == inst.expected["bad_se_is_se"]


@pytest.mark.parametrize("delta,n_prime", [(2, 5), (2, 9), (3, 14)])
def test_poa_regular_expectations(delta, n_prime):
    inst = gallery.poa_regular_instance(delta, n_prime)
    game, g = inst.game, inst.game.graph
    assert g.degree_profile() == (delta, delta, True, True)
    assert game.b == delta
    bad, opt = inst.profiles["bad_se"], inst.profiles["optimum"]
    assert doi(bad, g) == inst.expected["bad_se_doi"] == 2 * delta + 1
    assert doi(opt, g) == inst.expected["optimum_doi"] == delta * (delta + 1)
    assert is_swap_equilibrium(game, bad)[0]


def test_poa_regular_rejects_undersized_gadget():
    with pytest.raises(gallery.GeneratorError):
        gallery.poa_regular_instance(3, 8)


def test_pos_general_expectations():
    inst = gallery.pos_general_instance(2, 2, HALF)
    game, g = inst.game, inst.game.graph
    assert doi(inst.profiles["optimum"], g) == inst.expected["optimum_doi"]
    assert is_swap_equilibrium(game, inst.profiles["modest_se"])[0]
    # blues-on-clique optimum is strictly better than any SE
    report = enumerate_equilibria(game)
    assert report.opt_doi == inst.expected["optimum_doi"]
    assert report.max_se_doi < report.opt_doi


def test_pos_general_larger_star():
    inst = gallery.pos_general_instance(3, 2, Fraction(2, 5))
    game, g = inst.game, inst.game.graph
    assert g.n == (3 - 1) * 4 + 2 + 2 * 3
    assert doi(inst.profiles["optimum"], g) == inst.expected["optimum_doi"]
    assert is_swap_equilibrium(game, inst.profiles["modest_se"])[0]


def test_pos_bipartite_expectations():
    inst = gallery.pos_bipartite_instance(2)
    game, g = inst.game, inst.game.graph
    assert g.bipartition() is not None
    assert doi(inst.profiles["optimum"], g) == inst.expected["optimum_doi"] == 8
    assert doi(inst.profiles["best_se"], g) == inst.expected["best_se_doi"] == 7
    assert is_swap_equilibrium(game, inst.profiles["best_se"])[0]
    assert not is_swap_equilibrium(game, inst.profiles["optimum"])[0]
    report = enumerate_equilibria(game)
    assert report.max_se_doi == 7 and report.opt_doi == 8


def test_dominating_set_reduction_matches_brute_force():
    cases = [(gallery.clique(4), 1), (gallery.cube(), 1), (gallery.cube(), 2)]
    for g, k in cases:
        inst = gallery.dominating_set_reduction(g, k, Fraction(1, 4))
        opt, _ = optimal_doi(inst.game)
        assert (opt == g.n) == inst.expected["optimal_doi_is_n"]
        if inst.expected["optimal_doi_is_n"]:
            witness = inst.profiles["dominating_optimum"]
            assert doi(witness, g) == g.n
            blues = set(witness.blue_nodes())
            covered = set()
            for v in blues:
                covered |= g.closed_neighborhood(v)
            assert covered == set(range(g.n))


def test_dominating_set_reduction_rejects_non_cubic():
    with pytest.raises(gallery.GeneratorError):
        gallery.dominating_set_reduction(gallery.ring(6), 2, Fraction(1, 4))


def test_vertex_cover_reduction_k4():
    inst = gallery.vertex_cover_reduction(gallery.clique(4), 3)
    game, g = inst.game, inst.game.graph
    assert g.n == 47 and game.b == 4
    assert g.bipartition() is not None
    cover = inst.profiles["cover_optimum"]
    assert doi(cover, g) == 47
    assert is_swap_equilibrium(game, cover)[0]


def test_exact_solvers():
    k, ds = gallery.minimum_dominating_set(gallery.cube())
    assert k == 2
    vc = gallery.minimum_vertex_cover(gallery.clique(4))
    assert len(vc) == 3
    for u, v in gallery.clique(4).edges:
        assert u in vc or v in vc


def test_generator_argument_validation():
    with pytest.raises(gallery.GeneratorError):
        gallery.poa_ring_instance(3, HALF)           # odd b
    with pytest.raises(gallery.GeneratorError):
        gallery.poa_ring_instance(2, Fraction(2, 3))  # peak too high
    with pytest.raises(gallery.GeneratorError):
        gallery.pos_bipartite_instance(3)
    with pytest.raises(gallery.GeneratorError):
        gallery.pos_general_instance(2, 2, Fraction(1, 3))  # outside [1/q,1/(q-1))
