from __future__ import annotations

import random
from fractions import Fraction

import pytest

from peakswap import gallery
from peakswap.dynamics import (OutcomeKind, SwapPolicy, has_improving_cycle,
                               apply_swap, is_profitable_swap,
                               profitable_swaps, response_graph, run_dynamics,
                               sinks, verify_cycle_witness)
from peakswap.model import GameSpec, ModelError, Profile, potential

from conftest import HALF, THIRD, oracle_profitable


def test_profitability_matches_oracle():
    rng = random.Random(2)
    for g in [gallery.ring(6), gallery.grid(2, 4), gallery.petersen()]:
        for lam in [THIRD, HALF, Fraction(3, 4)]:
            game = GameSpec(g, g.n // 2, lam)
            for _ in range(30):
                blue = set(rng.sample(range(g.n), game.b))
                p = Profile.from_blue_nodes(g.n, blue)
                for u in range(g.n):
                    for v in range(u + 1, g.n):
                        if p.is_blue(u) == p.is_blue(v):
                            continue
                        assert (is_profitable_swap(game, p, u, v)
                                == oracle_profitable(g, blue, u, v, lam))


def test_profitable_swaps_lex_order():
    game = GameSpec(gallery.ring(6), 3, Fraction(3, 4))
    p = Profile.from_blue_nodes(6, [0, 1, 2])
    moves = list(profitable_swaps(game, p))
    assert moves == sorted(moves)
    assert all(p.is_blue(u) != p.is_blue(v) for u, v in moves)


def test_convergence_on_ring_low_peak():
    game = GameSpec(gallery.ring(6), 3, THIRD)
    out = run_dynamics(game, Profile.from_blue_nodes(6, [0, 1, 2]))
    assert out.kind is OutcomeKind.CONVERGED
    assert out.steps <= game.graph.m
    for st in out.trace:
        assert st.phi_after <= st.phi_before - 1


def test_cycle_detected_on_ring_high_peak():
    game = GameSpec(gallery.ring(6), 3, Fraction(3, 4))
    out = run_dynamics(game, Profile.from_blue_nodes(6, [0, 1, 2]))
    assert out.kind is OutcomeKind.CYCLE_DETECTED


def test_policies_agree_on_convergence():
    g = gallery.grid(2, 4)
    game = GameSpec(g, 4, HALF)
    start = Profile.from_blue_nodes(8, [0, 1, 2, 3])
    for policy in SwapPolicy:
        out = run_dynamics(game, start, policy, seed=1)
        assert out.kind is OutcomeKind.CONVERGED
        # a converged profile admits no profitable swap at all
        assert not list(profitable_swaps(game, out.final))


def test_best_phi_drop_policy_never_underperforms_first_lex():
    game = GameSpec(gallery.grid(2, 4), 4, HALF)
    start = Profile.from_blue_nodes(8, [0, 2, 5, 7])
    best = run_dynamics(game, start, SwapPolicy.BEST_POTENTIAL_DROP)
    if best.trace:
        first = run_dynamics(game, start, SwapPolicy.FIRST_LEX)
        drop = lambda o: o.trace[0].phi_before - o.trace[0].phi_after
        assert drop(best) >= drop(first)


def test_uniform_random_needs_seed():
    game = GameSpec(gallery.ring(6), 3, Fraction(3, 4))
    with pytest.raises(ModelError):
        run_dynamics(game, Profile.from_blue_nodes(6, [0, 1, 2]),
                     SwapPolicy.UNIFORM_RANDOM, seed=None)


def test_invalid_max_steps():
    game = GameSpec(gallery.ring(6), 3, HALF)
    with pytest.raises(ModelError):
        run_dynamics(game, Profile.from_blue_nodes(6, [0, 1, 2]), max_steps=0)


def test_response_graph_structure():
    game = GameSpec(gallery.ring(6), 3, HALF)
    rg = response_graph(game)
    assert len(rg) == 20
    for mask, succ in rg.items():
        p = Profile(6, mask)
        for mv, nxt in succ:
            assert is_profitable_swap(game, p, mv.u, mv.v)
            assert apply_swap(p, mv).blue_mask == nxt
    # sinks are exactly the equilibria
    from peakswap.analysis import is_swap_equilibrium
    for mask in rg:
        expect_sink = is_swap_equilibrium(game, Profile(6, mask))[0]
        assert (mask in set(sinks(rg))) == expect_sink


def test_improving_cycle_witness_ring6():
    game = GameSpec(gallery.ring(6), 3, Fraction(3, 4))
    found = has_improving_cycle(game)
    assert found is not None
    start, moves = found
    assert len(moves) >= 2
    assert verify_cycle_witness(game, start, moves)


def test_no_cycle_when_potential_decreases():
    game = GameSpec(gallery.ring(6), 3, THIRD)
    assert has_improving_cycle(game) is None


def test_verify_cycle_witness_rejects_bad_walk():
    game = GameSpec(gallery.ring(6), 3, Fraction(3, 4))
    start, moves = has_improving_cycle(game)
    assert not verify_cycle_witness(game, start, moves[:-1])


def test_trace_phi_matches_recount():
    game = GameSpec(gallery.cube(), 4, HALF)
    start = Profile.from_blue_nodes(8, [0, 1, 2, 4])
    out = run_dynamics(game, start)
    p = start
    for st in out.trace:
        assert st.phi_before == potential(p, game.graph)
        p = apply_swap(p, st.move)
        assert st.phi_after == potential(p, game.graph)
    assert p == out.final
