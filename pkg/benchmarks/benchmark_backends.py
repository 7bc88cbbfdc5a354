#!/usr/bin/env python3
"""Compare the compiled and pure-Python sweep kernels.

Runs the exhaustive equilibrium sweep over every blue placement for a few
ring/regular games on both backends and prints wall-clock timings plus the
speedup. Both backends must return identical results; this is asserted.

Usage: python benchmarks/benchmark_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from peakswap import _purecore, gallery
from peakswap.model import GameSpec

try:
    from peakswap import _fastcore
except ImportError:
    _fastcore = None


def kernel_args(game: GameSpec):
    g = game.graph
    return (list(g.closed_masks), list(g.degrees),
            [e[0] for e in g.edges], [e[1] for e in g.edges],
            game.n, game.b, game.peak.numerator, game.peak.denominator)


def time_sweep(module, args, repeat: int):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = module.sweep(*args)
        best = min(best, time.perf_counter() - t0)
    return best, tuple(result)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    half = Fraction(1, 2)
    cases = [
        ("ring18 b=9", GameSpec(gallery.ring(18), 9, half)),
        ("ring22 b=11", GameSpec(gallery.ring(22), 11, half)),
        ("4-regular n=20 b=10",
         GameSpec(gallery.random_regular(20, 4, seed=1), 10, half)),
        ("3-regular n=22 b=8",
         GameSpec(gallery.random_regular(22, 3, seed=2), 8, Fraction(1, 3))),
    ]

    print(f"{'case':<24} {'profiles':>10} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, game in cases:
        ka = kernel_args(game)
        t_pure, r_pure = time_sweep(_purecore, ka, args.repeat)
        if _fastcore is None:
            print(f"{name:<24} {r_pure[0]:>10} {t_pure:>9.3f}s {'n/a':>10} {'n/a':>8}")
            continue
        t_fast, r_fast = time_sweep(_fastcore, ka, args.repeat)
        assert r_pure == r_fast, f"backend mismatch on {name}"
        print(f"{name:<24} {r_pure[0]:>10} {t_pure:>9.3f}s {t_fast:>9.3f}s "
              f"{t_pure / t_fast:>7.1f}x")
    if _fastcore is None:
        print("\ncompiled extension not available; showing pure backend only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
