"""Deterministic generators for stock graphs and the named benchmark
instances, each bundled with tagged profiles and expected quantities.

Expected values are regression anchors: the test harness re-derives every
one of them through the analysis pipeline instead of trusting a generator.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import networkx as nx

from .graphs import Graph, GraphError, independence_number
from .model import GameSpec, Profile, check_peak

HALF = Fraction(1, 2)


class GeneratorError(ValueError):
    pass


@dataclass
class NamedInstance:
    name: str
    game: GameSpec
    profiles: dict[str, Profile] = field(default_factory=dict)
    expected: dict[str, object] = field(default_factory=dict)


# -- stock graphs ----------------------------------------------------------

def ring(n: int) -> Graph:
    if n < 3:
        raise GeneratorError("ring needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 2:
        raise GeneratorError("path needs n >= 2")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise GeneratorError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def clique(n: int) -> Graph:
    if n < 2:
        raise GeneratorError("clique needs n >= 2")
    return Graph(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GeneratorError("complete bipartite needs both sides nonempty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise GeneratorError("grid needs at least two nodes")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def circulant(n: int, offsets: list[int]) -> Graph:
    edges = set()
    for v in range(n):
        for off in offsets:
            w = (v + off) % n
            if w != v:
                edges.add((min(v, w), max(v, w)))
    return Graph(n, sorted(edges))


def cube() -> Graph:
    """The 3-dimensional hypercube Q3 (cubic, n=8)."""
    edges = [(u, u ^ (1 << i)) for u in range(8) for i in range(3) if u < u ^ (1 << i)]
    return Graph(8, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_regular(n: int, d: int, seed: int, max_tries: int = 200) -> Graph:
    """Seeded random connected d-regular graph."""
    if (n * d) % 2 or d >= n:
        raise GeneratorError(f"no {d}-regular graph on {n} nodes")
    for attempt in range(max_tries):
        gnx = nx.random_regular_graph(d, n, seed=seed * 1000 + attempt)
        if nx.is_connected(gnx):
            return Graph(n, sorted(tuple(sorted(e)) for e in gnx.edges()))
    raise GeneratorError(f"no connected {d}-regular graph found for seed {seed}")


def random_almost_regular(n: int, d: int, seed: int) -> Graph:
    """A random connected d-regular graph plus one extra edge, so degrees
    are d except for two nodes of degree d+1."""
    base = random_regular(n, d, seed)
    rng = random.Random(seed)
    non_edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not base.has_edge(u, v)
    ]
    if not non_edges:
        raise GeneratorError("graph is complete; cannot add an edge")
    extra = non_edges[rng.randrange(len(non_edges))]
    return Graph(n, list(base.edges) + [extra])


# -- small exact solvers used to seed reduction witnesses ------------------

def minimum_dominating_set(g: Graph, limit: int = 16) -> tuple[int, frozenset[int]]:
    if g.n > limit:
        raise GeneratorError(f"exact dominating set limited to n <= {limit}")
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            covered = 0
            for v in combo:
                covered |= g.closed_mask(v)
            if covered == full:
                return k, frozenset(combo)
    raise AssertionError("unreachable: V dominates itself")


def has_dominating_set(g: Graph, k: int, require_outside_neighbor: bool = True
                       ) -> Optional[frozenset[int]]:
    """A size-k dominating set, optionally with every member adjacent to a
    non-member; None if none exists."""
    full = (1 << g.n) - 1
    for combo in itertools.combinations(range(g.n), k):
        inside = set(combo)
        covered = 0
        for v in combo:
            covered |= g.closed_mask(v)
        if covered != full:
            continue
        if require_outside_neighbor and any(
            all(w in inside for w in g.neighbors(v)) for v in combo
        ):
            continue
        return frozenset(combo)
    return None


def minimum_vertex_cover(g: Graph) -> frozenset[int]:
    """Complement of a maximum independent set."""
    _, witness = independence_number(g)
    return frozenset(set(range(g.n)) - witness)


# -- named benchmark instances ---------------------------------------------

def no_se_ring(lam: Fraction) -> NamedInstance:
    """Ring of 6 with b=3: no SE exists for any peak above 1/2."""
    check_peak(lam)
    if lam <= HALF:
        raise GeneratorError("the no-SE ring argument needs peak > 1/2")
    game = GameSpec(ring(6), 3, lam)
    return NamedInstance("no_se_ring", game, expected={"se_exists": False})


def poa_ring_instance(b: int, lam: Fraction) -> NamedInstance:
    """Ring of 3b whose worst SE pins the PoA lower bound for rings."""
    check_peak(lam)
    if b < 2 or b % 2:
        raise GeneratorError("b must be even and at least 2")
    if lam > HALF:
        raise GeneratorError("peak must be at most 1/2")
    n = 3 * b
    game = GameSpec(ring(n), b, lam)
    if lam == HALF:
        # two blue then one red, as long as blues last
        blues = [3 * t + i for t in range(b // 2) for i in (0, 1)]
        bad_doi = 3 * b // 2 + 1
    else:
        # alternate blue and red as long as possible
        blues = [2 * t for t in range(b)]
        bad_doi = 2 * b + 1
    bad = Profile.from_blue_nodes(n, blues)
    opt = Profile.from_blue_nodes(n, [3 * t + 1 for t in range(b)])
    return NamedInstance(
        "poa_ring", game,
        profiles={"bad_se": bad, "optimum": opt},
        expected={"bad_se_doi": bad_doi, "optimum_doi": 3 * b, "bad_se_is_se": True},
    )


def poa_regular_instance(delta: int, n_prime: int,
                         lam: Fraction = HALF) -> NamedInstance:
    """Three-gadget delta-regular graph whose SE strands all but 2*delta+1
    agents while the optimum integrates delta*(delta+1)."""
    check_peak(lam)
    if delta < 2:
        raise GeneratorError("delta must be at least 2")
    if lam > HALF:
        raise GeneratorError("peak must be at most 1/2")
    edges: list[tuple[int, int]] = []

    # Left gadget: K_{delta,delta} minus the edge between the two ports.
    side_a = list(range(delta))
    side_b = list(range(delta, 2 * delta))
    port_a, port_b = side_a[-1], side_b[-1]
    for u in side_a:
        for v in side_b:
            if (u, v) != (port_a, port_b):
                edges.append((u, v))

    # Upper right gadget: K_{delta-1} joined to two special nodes.
    cl = list(range(2 * delta, 3 * delta - 1))
    s1, s2 = 3 * delta - 1, 3 * delta
    edges += list(itertools.combinations(cl, 2))
    edges += [(s1, c) for c in cl] + [(s2, c) for c in cl]
    edges.append((port_a, s1))

    # Lower right gadget: circulant delta-regular graph minus one edge.
    base = 3 * delta + 1
    if delta % 2 == 0:
        offsets = list(range(1, delta // 2 + 1))
        if n_prime <= delta:
            raise GeneratorError("n_prime too small for the circulant gadget")
    else:
        if n_prime % 2 or n_prime <= delta:
            raise GeneratorError("odd delta needs an even, large enough n_prime")
        offsets = list(range(1, (delta - 1) // 2 + 1)) + [n_prime // 2]
    sub = circulant(n_prime, offsets)
    u0, u1 = base, base + 1
    for u, v in sub.edges:
        if (u, v) != (0, 1):
            edges.append((base + u, base + v))
    edges += [(port_b, u0), (s2, u1)]

    n = base + n_prime
    g = Graph(n, edges)
    lo, hi, regular, _ = g.degree_profile()
    if not (regular and lo == delta):
        raise GraphError(f"gadget wiring produced degrees [{lo},{hi}], wanted {delta}")

    game = GameSpec(g, delta, lam)
    bad = Profile.from_blue_nodes(n, side_a)

    # delta circulant nodes with pairwise disjoint closed neighborhoods
    # (exact search: a first-fit greedy misses solutions when the circulant
    # uses the antipodal offset)
    chosen: Optional[tuple[int, ...]] = None
    for combo in itertools.combinations(range(base, n), delta):
        used = 0
        for v in combo:
            if used & g.closed_mask(v):
                break
            used |= g.closed_mask(v)
        else:
            chosen = combo
            break
    if chosen is None:
        raise GeneratorError(
            f"n_prime={n_prime} too small for {delta} disjoint closed neighborhoods"
        )
    opt = Profile.from_blue_nodes(n, chosen)
    return NamedInstance(
        "poa_regular", game,
        profiles={"bad_se": bad, "optimum": opt},
        expected={
            "bad_se_doi": 2 * delta + 1,
            "optimum_doi": delta * (delta + 1),
            "bad_se_is_se": True,
        },
    )


def pos_general_instance(q: int, b: int, lam: Fraction) -> NamedInstance:
    """Clique with private leaves and pendant stars: optimum integrates the
    whole leaf layer but every SE holds at most one blue clique node."""
    check_peak(lam)
    if q < 2 or b < 2:
        raise GeneratorError("need q >= 2 and b >= 2")
    if not (Fraction(1, q) <= lam < Fraction(1, q - 1)):
        raise GeneratorError(f"peak must lie in [1/{q}, 1/{q - 1})")
    edges = list(itertools.combinations(range(b), 2))
    next_id = b
    star_centers = []
    for v in range(b):
        for _ in range((q - 1) * b):          # private leaves
            edges.append((v, next_id))
            next_id += 1
        bridge = next_id                       # star leaf adjacent to clique
        center = next_id + 1
        edges.append((v, bridge))
        edges.append((bridge, center))
        star_centers.append(center)
        next_id += 2
        for _ in range(q - 2):                 # remaining star leaves
            edges.append((center, next_id))
            next_id += 1
    n = next_id
    assert n == (q - 1) * b * b + b + b * q
    game = GameSpec(Graph(n, edges), b, lam)
    opt = Profile.from_blue_nodes(n, range(b))
    modest = Profile.from_blue_nodes(n, [0] + star_centers[1:b])
    return NamedInstance(
        "pos_general", game,
        profiles={"optimum": opt, "modest_se": modest},
        expected={
            "optimum_doi": (q - 1) * b * b + 2 * b,
            "modest_se_is_se": True,
            "max_blue_clique_nodes_in_se": 1,
        },
    )


def pos_bipartite_instance(b: int) -> NamedInstance:
    """Base path with leaf bundles and pendant 2-paths; tight PoS-2 family."""
    if b < 2 or b % 2:
        raise GeneratorError("b must be even and at least 2")
    edges = [(i, i + 1) for i in range(b - 1)]
    next_id = b
    p1 = {}
    for v in range(b):
        for _ in range(2 * (b - 1)):           # upper leaves
            edges.append((v, next_id))
            next_id += 1
        p1[v] = next_id                        # pendant 2-path below
        edges.append((v, next_id))
        edges.append((next_id, next_id + 1))
        next_id += 2
    n = next_id
    game = GameSpec(Graph(n, edges), b, HALF)
    opt = Profile.from_blue_nodes(n, range(b))
    best = Profile.from_blue_nodes(
        n, [v for v in range(b) if v % 2 == 0] + [p1[v] for v in range(b) if v % 2 == 1]
    )
    return NamedInstance(
        "pos_bipartite", game,
        profiles={"optimum": opt, "best_se": best},
        expected={
            "optimum_doi": 2 * (b - 1) * b + 2 * b,
            "best_se_doi": b * (b - 1) + 5 * b // 2,
            "best_se_is_se": True,
            "optimum_is_se": False,
        },
    )


def dominating_set_reduction(g_prime: Graph, k: int, lam: Fraction) -> NamedInstance:
    """The game on a cubic graph itself: full integration iff a size-k
    dominating set (each member dominating a non-member) exists."""
    check_peak(lam)
    _, _, regular, _ = g_prime.degree_profile()
    if not (regular and g_prime.degree(0) == 3):
        raise GeneratorError("input graph must be cubic")
    game = GameSpec(g_prime, k, lam)
    witness = has_dominating_set(g_prime, k)
    inst = NamedInstance(
        "dominating_set_reduction", game,
        expected={"optimal_doi_is_n": witness is not None},
    )
    if witness is not None:
        inst.profiles["dominating_optimum"] = Profile.from_blue_nodes(
            g_prime.n, witness
        )
    return inst


def vertex_cover_reduction(g_prime: Graph, k_star: int,
                           lam: Fraction = HALF) -> NamedInstance:
    """Bipartite gadget graph from a cubic instance; the cover placement is
    simultaneously fully integrated and an SE for peak <= 1/2."""
    check_peak(lam)
    if lam > HALF:
        raise GeneratorError("peak must be at most 1/2")
    _, _, regular, _ = g_prime.degree_profile()
    if not (regular and g_prime.degree(0) == 3):
        raise GeneratorError("input graph must be cubic")
    n_p, m_p = g_prime.n, g_prime.m
    # ids: x_v = v; y_e^1/y_e^2 = n_p + 2j, n_p + 2j + 1; z; then 5m' dummies
    z = n_p + 2 * m_p
    n = n_p + 7 * m_p + 1
    edges = [(z, d) for d in range(z + 1, n)]
    edges += [(v, z) for v in range(n_p)]
    for j, (u, v) in enumerate(g_prime.edges):
        for i in (0, 1):
            y = n_p + 2 * j + i
            edges += [(u, y), (v, y)]
    game = GameSpec(Graph(n, edges), k_star + 1, lam)
    inst = NamedInstance("vertex_cover_reduction", game,
                         expected={"n": n, "b": k_star + 1})
    cover = minimum_vertex_cover(g_prime)
    if len(cover) == k_star:
        inst.profiles["cover_optimum"] = Profile.from_blue_nodes(
            n, sorted(cover) + [z]
        )
        inst.expected["cover_optimum_doi"] = n
        inst.expected["cover_optimum_is_se"] = True
    return inst
