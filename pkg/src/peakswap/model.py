"""Game definition, strategy profiles and the exact single-peaked utility machinery.

All strict-improvement logic compares `peak_score` values, which are exact
rationals; the two shipped display utilities (tent and squared tent) exist
only for rendering and for testing that decisions never depend on them.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .graphs import Graph


class ModelError(ValueError):
    pass


def parse_peak(text: str) -> Fraction:
    """Parse a 'p/q' string into an exact peak value in (0,1)."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ModelError(f"cannot parse peak {text!r}") from exc
    return check_peak(value)


def check_peak(value: Fraction) -> Fraction:
    if not (0 < value < 1):
        raise ModelError(f"peak must lie strictly between 0 and 1, got {value}")
    return value


class DisplayPeak(enum.Enum):
    """Concrete realizations of the utility shape, for display values only."""
    TENT = "tent"
    SQUARED_TENT = "squared_tent"


class NeighborhoodFraction(NamedTuple):
    """Unreduced same-color count over closed-neighborhood size.

    x counts the node itself plus same-colored neighbors; y is degree+1.
    Kept unreduced because the swap-prediction identity consumes raw counts.
    """
    x: int
    y: int


class PeakSide(enum.Enum):
    BELOW = "below"
    AT = "at"
    ABOVE = "above"


@dataclass(frozen=True)
class GameSpec:
    """A game: connected graph, minority (blue) count b, rational peak."""
    graph: Graph
    b: int
    peak: Fraction
    display_peak: DisplayPeak = DisplayPeak.TENT

    def __post_init__(self):
        if not (1 <= self.b <= self.graph.n // 2):
            raise ModelError(
                f"blue count b={self.b} must satisfy 1 <= b <= n/2 (n={self.graph.n})"
            )
        check_peak(self.peak)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def r(self) -> int:
        return self.graph.n - self.b


class Profile:
    """A bi-coloring with exactly b blue nodes, stored as a bitmask.

    Value semantics: all mutations return new profiles. Hashable, so
    visited-set membership during dynamics is cheap.
    """

    __slots__ = ("n", "blue_mask")

    def __init__(self, n: int, blue_mask: int):
        if blue_mask < 0 or blue_mask >> n:
            raise ModelError(f"blue mask {blue_mask:#x} out of range for n={n}")
        self.n = n
        self.blue_mask = blue_mask

    @classmethod
    def from_blue_nodes(cls, n: int, blue: Iterable[int]) -> "Profile":
        mask = 0
        for v in blue:
            if not (0 <= v < n):
                raise ModelError(f"blue node {v} out of range for n={n}")
            if mask >> v & 1:
                raise ModelError(f"duplicate blue node {v}")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def blue_count(self) -> int:
        return self.blue_mask.bit_count()

    def blue_nodes(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.blue_mask >> v & 1)

    def red_nodes(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.blue_mask >> v & 1)

    def is_blue(self, v: int) -> bool:
        return bool(self.blue_mask >> v & 1)

    def swap(self, u: int, v: int) -> "Profile":
        if self.is_blue(u) == self.is_blue(v):
            return Profile(self.n, self.blue_mask)
        return Profile(self.n, self.blue_mask ^ (1 << u) ^ (1 << v))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Profile)
            and self.n == other.n
            and self.blue_mask == other.blue_mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blue_mask))

    def __repr__(self) -> str:
        return f"Profile(n={self.n}, blue={list(self.blue_nodes())})"

    def to_json(self) -> str:
        return json.dumps({"blue": list(self.blue_nodes())})

    @classmethod
    def from_json(cls, n: int, text: str) -> "Profile":
        data = json.loads(text)
        return cls.from_blue_nodes(n, data["blue"])


def validate_profile(game: GameSpec, p: Profile) -> None:
    if p.n != game.n:
        raise ModelError(f"profile has n={p.n}, game has n={game.n}")
    if p.blue_count != game.b:
        raise ModelError(f"profile has {p.blue_count} blue nodes, game expects {game.b}")


# -- fractions, scores and display utilities ------------------------------

def same_color_fraction(game: GameSpec, p: Profile, v: int) -> NeighborhoodFraction:
    """Same-color count (including v itself) over the closed neighborhood of v."""
    game.graph._check_node(v)
    closed = game.graph.closed_mask(v)
    if p.is_blue(v):
        x = (closed & p.blue_mask).bit_count()
    else:
        x = (closed & ~p.blue_mask).bit_count()
    return NeighborhoodFraction(x, game.graph.degree(v) + 1)


def peak_score(f: NeighborhoodFraction, peak: Fraction) -> Fraction:
    """Canonical comparison value: the fraction folded onto the rising side.

    Below or at the peak the score is x/y itself; above the peak it is the
    mirrored point peak*(1 - x/y)/(1 - peak). Because the utility shape is
    strictly increasing up to the peak, comparing scores reproduces the
    utility ordering of every admissible shape.
    """
    value = Fraction(f.x, f.y)
    if value <= peak:
        return value
    return peak * (1 - value) / (1 - peak)


def utility_value(f: NeighborhoodFraction, game: GameSpec) -> Fraction:
    """Display-only utility; peak value 1 under both shipped shapes."""
    s = peak_score(f, game.peak) / game.peak
    if game.display_peak is DisplayPeak.SQUARED_TENT:
        return s * s
    return s


def classify(f: NeighborhoodFraction, peak: Fraction) -> tuple[PeakSide, bool]:
    """(side of the peak, segregated?) with exact comparison."""
    value = Fraction(f.x, f.y)
    if value < peak:
        side = PeakSide.BELOW
    elif value == peak:
        side = PeakSide.AT
    else:
        side = PeakSide.ABOVE
    return side, f.x == f.y


def predicted_swap_fraction(f: NeighborhoodFraction, adjacent: bool) -> NeighborhoodFraction:
    """Fraction the swap partner would experience at this node after swapping."""
    return NeighborhoodFraction(f.y + 1 - f.x - (1 if adjacent else 0), f.y)


# -- profile-level quantities ---------------------------------------------

def segregated_nodes(p: Profile, g: Graph) -> tuple[int, ...]:
    out = []
    blue = p.blue_mask
    for v in range(g.n):
        closed = g.closed_mask(v)
        same = closed & blue if blue >> v & 1 else closed & ~blue
        if same == closed:
            out.append(v)
    return tuple(out)


def doi(p: Profile, g: Graph) -> int:
    """Degree of integration: the number of non-segregated nodes."""
    return g.n - len(segregated_nodes(p, g))


def potential(p: Profile, g: Graph) -> int:
    """Number of monochromatic edges."""
    blue = p.blue_mask
    count = 0
    for u, v in g.edges:
        if (blue >> u & 1) == (blue >> v & 1):
            count += 1
    return count


def sum_welfare(p: Profile, game: GameSpec) -> Fraction:
    validate_profile(game, p)
    total = Fraction(0)
    for v in range(game.n):
        total += utility_value(same_color_fraction(game, p, v), game)
    return total


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"
