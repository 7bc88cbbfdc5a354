"""Profitable-swap detection, improving-response dynamics and cycle search.

The swap schedule is a free choice, so three scheduling policies are
provided; FirstLex is the deterministic default. Cycle
detection works on full profiles (blue bitmask membership), never on
automorphism classes.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

from . import core
from .graphs import BudgetExceededError
from .model import GameSpec, Profile, ModelError, potential, doi, validate_profile


class SwapMove(NamedTuple):
    u: int
    v: int


class SwapPolicy(enum.Enum):
    FIRST_LEX = "first-lex"
    BEST_POTENTIAL_DROP = "best-phi-drop"
    UNIFORM_RANDOM = "uniform-random"


class OutcomeKind(enum.Enum):
    CONVERGED = "converged"
    CYCLE_DETECTED = "cycle-detected"
    BUDGET_EXHAUSTED = "budget-exhausted"


class TraceStep(NamedTuple):
    step: int
    move: SwapMove
    phi_before: int
    phi_after: int
    doi_after: int


@dataclass
class DynamicsOutcome:
    kind: OutcomeKind
    final: Profile
    steps: int
    trace: list[TraceStep] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "final": {"blue": list(self.final.blue_nodes())},
            "steps": self.steps,
        }


def is_profitable_swap(game: GameSpec, p: Profile, u: int, v: int) -> bool:
    """True iff u and v hold different colors and the exchange strictly
    raises the peak score of both moved agents."""
    if u == v:
        raise ModelError("swap needs two distinct nodes")
    game.graph._check_node(u)
    game.graph._check_node(v)
    return core.swap_profitable(game, p, u, v)


def apply_swap(p: Profile, move: SwapMove) -> Profile:
    return p.swap(move.u, move.v)


def profitable_swaps(game: GameSpec, p: Profile) -> Iterator[SwapMove]:
    """All profitable swaps in lexicographic (u,v) order."""
    n = game.n
    for u in range(n):
        for v in range(u + 1, n):
            if p.is_blue(u) != p.is_blue(v) and core.swap_profitable(game, p, u, v):
                yield SwapMove(u, v)


def find_profitable_swap(
    game: GameSpec,
    p: Profile,
    policy: SwapPolicy = SwapPolicy.FIRST_LEX,
    rng: Optional[random.Random] = None,
) -> Optional[SwapMove]:
    if policy is SwapPolicy.FIRST_LEX:
        ce = core.find_counterexample(game, p)
        return None if ce is None else SwapMove(*ce)
    moves = list(profitable_swaps(game, p))
    if not moves:
        return None
    if policy is SwapPolicy.BEST_POTENTIAL_DROP:
        phi_now = potential(p, game.graph)
        # max drop, ties lexicographic (moves are generated in lex order)
        return max(moves, key=lambda mv: phi_now - potential(apply_swap(p, mv), game.graph))
    if policy is SwapPolicy.UNIFORM_RANDOM:
        if rng is None:
            raise ModelError("UniformRandom policy needs an rng (seed)")
        return moves[rng.randrange(len(moves))]
    raise ModelError(f"unknown policy {policy}")


def run_dynamics(
    game: GameSpec,
    start: Profile,
    policy: SwapPolicy = SwapPolicy.FIRST_LEX,
    max_steps: int = 10_000,
    seed: Optional[int] = None,
) -> DynamicsOutcome:
    """Iterate profitable swaps until convergence, a revisited profile, or
    the step budget runs out."""
    validate_profile(game, start)
    if max_steps < 1:
        raise ModelError("max_steps must be at least 1")
    if policy is SwapPolicy.UNIFORM_RANDOM and seed is None:
        raise ModelError("UniformRandom policy needs a seed for reproducibility")
    rng = random.Random(seed) if policy is SwapPolicy.UNIFORM_RANDOM else None
    g = game.graph
    current = start
    visited = {current.blue_mask}
    trace: list[TraceStep] = []
    for step in range(1, max_steps + 1):
        move = find_profitable_swap(game, current, policy, rng)
        if move is None:
            return DynamicsOutcome(OutcomeKind.CONVERGED, current, step - 1, trace)
        phi_before = potential(current, g)
        current = apply_swap(current, move)
        trace.append(TraceStep(step, move, phi_before,
                               potential(current, g), doi(current, g)))
        if current.blue_mask in visited:
            return DynamicsOutcome(OutcomeKind.CYCLE_DETECTED, current, step, trace)
        visited.add(current.blue_mask)
    return DynamicsOutcome(OutcomeKind.BUDGET_EXHAUSTED, current, max_steps, trace)


# -- full response graph ---------------------------------------------------

def response_graph(game: GameSpec, budget: Optional[int] = None
                   ) -> dict[int, list[tuple[SwapMove, int]]]:
    """Directed graph over all blue bitmasks; edge per profitable swap."""
    core.check_budget(game, budget)
    from ._purecore import _subsets

    out: dict[int, list[tuple[SwapMove, int]]] = {}
    for mask in _subsets(game.n, game.b):
        p = Profile(game.n, mask)
        succ = []
        for mv in profitable_swaps(game, p):
            succ.append((mv, apply_swap(p, mv).blue_mask))
        out[mask] = succ
    return out


def sinks(rgraph: dict[int, list[tuple[SwapMove, int]]]) -> list[int]:
    return [mask for mask, succ in rgraph.items() if not succ]


def has_improving_cycle(game: GameSpec, budget: Optional[int] = None
                        ) -> Optional[tuple[Profile, list[SwapMove]]]:
    """A closed walk of profitable swaps, if one exists.

    Returns (start profile, moves) with the moves returning to the start,
    or None when the response graph is acyclic.
    """
    rgraph = response_graph(game, budget)
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {mask: WHITE for mask in rgraph}
    parent: dict[int, tuple[int, SwapMove]] = {}

    for root in rgraph:
        if color[root] != WHITE:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        color[root] = GRAY
        while stack:
            node, idx = stack[-1]
            if idx < len(rgraph[node]):
                stack[-1] = (node, idx + 1)
                mv, nxt = rgraph[node][idx]
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    parent[nxt] = (node, mv)
                    stack.append((nxt, 0))
                elif color[nxt] == GRAY:
                    # back edge: walk parents from `node` back to `nxt`
                    moves = [mv]
                    cur = node
                    while cur != nxt:
                        prev, pmv = parent[cur]
                        moves.append(pmv)
                        cur = prev
                    moves.reverse()
                    return Profile(game.n, nxt), moves
            else:
                color[node] = BLACK
                stack.pop()
    return None


def verify_cycle_witness(game: GameSpec, start: Profile,
                         moves: list[SwapMove]) -> bool:
    """Every move profitable and the walk returns to its start profile."""
    p = start
    for mv in moves:
        if not is_profitable_swap(game, p, mv.u, mv.v):
            return False
        p = apply_swap(p, mv)
    return p == start
