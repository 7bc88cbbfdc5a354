"""Shared corpora and independent oracles.

The oracles recompute everything from first principles (sets and
fractions.Fraction over the adjacency lists) so the bitmask kernels are
never trusted to test themselves.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from peakswap import gallery
from peakswap.graphs import Graph
from peakswap.model import GameSpec, Profile

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


# -- independent oracles ----------------------------------------------------

def oracle_fraction(g: Graph, blue: set[int], v: int) -> Fraction:
    closed = set(g.neighbors(v)) | {v}
    mine = v in blue
    same = sum(1 for w in closed if (w in blue) == mine)
    return Fraction(same, len(closed))


def oracle_score(g: Graph, blue: set[int], v: int, lam: Fraction) -> Fraction:
    f = oracle_fraction(g, blue, v)
    return f if f <= lam else lam * (1 - f) / (1 - lam)


def oracle_profitable(g: Graph, blue: set[int], u: int, v: int,
                      lam: Fraction) -> bool:
    """Swap of the agents at u and v improves both, recomputed naively."""
    if (u in blue) == (v in blue):
        return False
    after = blue ^ {u, v}
    # the agent formerly at u now sits at v, and vice versa
    return (oracle_score(g, after, v, lam) > oracle_score(g, blue, u, lam)
            and oracle_score(g, after, u, lam) > oracle_score(g, blue, v, lam))


def oracle_is_se(g: Graph, blue: set[int], lam: Fraction) -> bool:
    reds = set(range(g.n)) - blue
    return not any(oracle_profitable(g, blue, u, v, lam)
                   for u in blue for v in reds)


def oracle_doi(g: Graph, blue: set[int]) -> int:
    return sum(1 for v in range(g.n)
               if oracle_fraction(g, blue, v) < 1)


def oracle_phi(g: Graph, blue: set[int]) -> int:
    return sum(1 for u, v in g.edges if (u in blue) == (v in blue))


def all_profiles(n: int, b: int):
    for combo in itertools.combinations(range(n), b):
        yield set(combo)


def oracle_sweep(g: Graph, b: int, lam: Fraction):
    """(se blue-sets, best doi) by full enumeration with the naive checks."""
    ses, best = [], 0
    for blue in all_profiles(g.n, b):
        if oracle_is_se(g, blue, lam):
            ses.append(frozenset(blue))
        best = max(best, oracle_doi(g, blue))
    return ses, best


# -- corpora ---------------------------------------------------------------

def small_graphs() -> list[Graph]:
    """Connected graphs with n <= 10, mixed degree structure."""
    return [
        gallery.ring(5),
        gallery.ring(6),
        gallery.path(6),
        gallery.star(5),
        gallery.clique(5),
        gallery.complete_bipartite(2, 3),
        gallery.grid(2, 4),
        gallery.grid(3, 3),
        gallery.cube(),
        gallery.petersen(),
        gallery.circulant(8, [1, 2]),
    ]


def bipartite_graphs() -> list[Graph]:
    """Bipartite connected graphs with n <= 12."""
    return [
        gallery.ring(6),
        gallery.ring(8),
        gallery.ring(10),
        gallery.ring(12),
        gallery.path(7),
        gallery.star(6),
        gallery.complete_bipartite(3, 4),
        gallery.complete_bipartite(2, 6),
        gallery.grid(2, 5),
        gallery.grid(3, 4),
        gallery.cube(),
    ]


def corpus_games(max_n: int = 10, peaks=(THIRD, HALF)) -> list[GameSpec]:
    games = []
    for g in small_graphs():
        if g.n > max_n:
            continue
        for b in sorted({1, 2, g.n // 2}):
            for lam in peaks:
                games.append(GameSpec(g, b, lam))
    return games


@pytest.fixture(scope="session")
def small_corpus():
    return small_graphs()


@pytest.fixture(scope="session")
def bipartite_corpus():
    return bipartite_graphs()


@pytest.fixture(scope="session")
def game_corpus():
    return corpus_games()


def profile_of(blue: set[int] | frozenset[int], n: int) -> Profile:
    return Profile.from_blue_nodes(n, sorted(blue))


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, after capture ends."""
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS):
            terminalreporter.write_line(line)
