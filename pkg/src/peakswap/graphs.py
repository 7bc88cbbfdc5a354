"""Immutable simple undirected graphs and the structural subroutines built on them.

Nodes are dense integer ids ``0..n-1``; adjacency is kept both as sorted
tuples (for iteration) and as bitmasks (for the enumeration kernels).
Top-level graphs must be connected; induced subgraph views may not be.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph input (self-loop, duplicate edge, out of range, disconnected)."""


class BudgetExceededError(RuntimeError):
    """A configurable resource cap was hit before the computation finished."""


class Graph:
    """Simple undirected connected graph on nodes 0..n-1."""

    __slots__ = ("n", "m", "_adj", "_deg", "_nbr_mask", "_closed_mask", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise GraphError("graph needs at least one node")
        adj: list[set[int]] = [set() for _ in range(n)]
        edge_list: list[tuple[int, int]] = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"parallel edge {key}")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
            edge_list.append(key)
        self.n = n
        self.m = len(edge_list)
        self._edges = tuple(sorted(edge_list))
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._deg = tuple(len(s) for s in adj)
        self._nbr_mask = tuple(sum(1 << u for u in s) for s in adj)
        self._closed_mask = tuple((1 << v) | self._nbr_mask[v] for v in range(n))
        if not self._is_connected():
            raise GraphError("graph is not connected")

    def _is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    # -- basic accessors -------------------------------------------------

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_node(v)
        return self._deg[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        """{v} together with all neighbors of v; size is degree(v)+1."""
        self._check_node(v)
        return frozenset((v, *self._adj[v]))

    def closed_mask(self, v: int) -> int:
        return self._closed_mask[v]

    @property
    def closed_masks(self) -> tuple[int, ...]:
        return self._closed_mask

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return bool(self._nbr_mask[u] >> v & 1)

    def _check_node(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"node id {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- structural predicates -------------------------------------------

    def degree_profile(self) -> tuple[int, int, bool, bool]:
        """(min degree, max degree, regular?, almost regular?)."""
        lo = min(self._deg)
        hi = max(self._deg)
        return lo, hi, lo == hi, hi - lo <= 1

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """The unique 2-coloring classes if bipartite (|V1| <= |V2|), else None."""
        color = [-1] * self.n
        color[0] = 0
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
        a = frozenset(v for v in range(self.n) if color[v] == 0)
        b = frozenset(v for v in range(self.n) if color[v] == 1)
        return (a, b) if len(a) <= len(b) else (b, a)

    def induced_subgraph(self, nodes: Iterable[int]) -> "InducedSubgraph":
        return InducedSubgraph(self, nodes)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self._edges]})

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        data = json.loads(text)
        return cls(int(data["n"]), [(int(u), int(v)) for u, v in data["edges"]])

    @classmethod
    def from_edge_list(cls, text: str) -> "Graph":
        """Plain 'u v' pairs, one per line; node count inferred as max id + 1."""
        edges = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            u, v = line.split()
            edges.append((int(u), int(v)))
        if not edges:
            raise GraphError("empty edge list")
        n = max(max(e) for e in edges) + 1
        return cls(n, edges)

    def to_dot(self, blue_nodes: Optional[Iterable[int]] = None,
               segregated: Optional[Iterable[int]] = None) -> str:
        blue = set(blue_nodes) if blue_nodes is not None else None
        outlined = set(segregated) if segregated is not None else set()
        lines = ["graph G {"]
        for v in range(self.n):
            attrs = []
            if blue is not None:
                fill = "lightblue" if v in blue else "lightcoral"
                attrs.append(f'style=filled, fillcolor="{fill}"')
            if v in outlined:
                attrs.append("penwidth=3")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  {v}{suffix};")
        for u, v in self._edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class InducedSubgraph:
    """Read-only view of the subgraph induced by a node subset.

    Keeps the original node ids; unlike Graph it may be disconnected,
    which the cut constructions rely on.
    """

    __slots__ = ("parent", "nodes", "_node_set")

    def __init__(self, parent: Graph, nodes: Iterable[int]):
        node_tuple = tuple(sorted(set(nodes)))
        for v in node_tuple:
            parent._check_node(v)
        self.parent = parent
        self.nodes = node_tuple
        self._node_set = frozenset(node_tuple)

    @property
    def n(self) -> int:
        return len(self.nodes)

    def neighbors(self, v: int) -> tuple[int, ...]:
        if v not in self._node_set:
            raise GraphError(f"node {v} not in induced subgraph")
        return tuple(w for w in self.parent.neighbors(v) if w in self._node_set)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u, v in self.parent.edges
            if u in self._node_set and v in self._node_set
        )

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._node_set and v in self._node_set and self.parent.has_edge(u, v)


def _greedy_independent_set(g: Graph) -> int:
    """Bitmask of a maximal independent set picked by ascending degree."""
    chosen = 0
    blocked = 0
    for v in sorted(range(g.n), key=lambda v: (g.degree(v), v)):
        if not (blocked >> v & 1):
            chosen |= 1 << v
            blocked |= g.closed_mask(v)
    return chosen


def independence_number(g: Graph, expansion_cap: int = 1_000_000) -> tuple[int, frozenset[int]]:
    """Exact maximum independent set size with a witness, by branch and bound.

    Intended for n up to roughly 40. Raises BudgetExceededError once
    `expansion_cap` search nodes have been expanded, so callers can skip
    alpha-gated analyses instead of trusting an approximation.
    """
    n = g.n
    closed = g._closed_mask
    best_mask = _greedy_independent_set(g)
    best = best_mask.bit_count()
    expansions = 0

    # Iterative DFS: stack of (chosen_mask, candidate_mask).
    stack = [(0, (1 << n) - 1)]
    while stack:
        chosen, cand = stack.pop()
        expansions += 1
        if expansions > expansion_cap:
            raise BudgetExceededError(
                f"independence_number: expansion cap {expansion_cap} exceeded"
            )
        size = chosen.bit_count()
        if cand == 0:
            if size > best:
                best, best_mask = size, chosen
            continue
        if size + cand.bit_count() <= best:
            continue
        # Branch on the candidate of maximum residual degree.
        v = max(_iter_bits(cand), key=lambda v: ((closed[v] & cand).bit_count(), v))
        vbit = 1 << v
        stack.append((chosen, cand & ~vbit))          # exclude v
        stack.append((chosen | vbit, cand & ~closed[v]))  # include v
    witness = frozenset(_iter_bits(best_mask))
    assert _is_independent(g, witness)
    return best, witness


def _is_independent(g: Graph, nodes: Iterable[int]) -> bool:
    nodes = list(nodes)
    return all(not g.has_edge(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1:])


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
