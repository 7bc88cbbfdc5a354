"""Command-line surface.

Subcommands: generate, dynamics, analyze, construct, export-dot, hunt.
Every JSON output embeds the parsed run configuration and the library
version, so re-running a config reproduces outputs byte-for-byte.

Exit codes: 0 ok, 1 usage/precondition error, 2 improving-response cycle,
3 enumeration/step budget exhausted, 4 bound-check violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import __version__, construct, core, gallery
from .analysis import enumerate_equilibria, is_swap_equilibrium
from .dynamics import OutcomeKind, SwapPolicy, run_dynamics
from .graphs import BudgetExceededError, Graph, GraphError
from .model import (GameSpec, ModelError, Profile, doi, parse_peak, potential,
                    validate_profile)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CYCLE = 2
EXIT_BUDGET = 3
EXIT_BOUND = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


class CliError(Exception):
    pass


# -- graph / profile sources -----------------------------------------------

_STOCK = {
    "ring": (gallery.ring, 1),
    "path": (gallery.path, 1),
    "star": (gallery.star, 1),
    "clique": (gallery.clique, 1),
    "complete-bipartite": (gallery.complete_bipartite, 2),
    "grid": (gallery.grid, 2),
    "cube": (gallery.cube, 0),
    "petersen": (gallery.petersen, 0),
    "random-regular": (gallery.random_regular, 3),
    "random-almost-regular": (gallery.random_almost_regular, 3),
}


def parse_graph_spec(spec: str) -> Graph:
    """Stock graph shorthand, e.g. ring:6, grid:3,4, random-regular:10,3,7,
    circulant:8,1+4."""
    name, _, rest = spec.partition(":")
    args = rest.split(",") if rest else []
    if name == "circulant":
        if len(args) != 2:
            raise CliError("circulant wants n,offsets (offsets joined by +)")
        return gallery.circulant(int(args[0]), [int(o) for o in args[1].split("+")])
    if name not in _STOCK:
        raise CliError(f"unknown stock graph {name!r} "
                       f"(choices: {', '.join(sorted(_STOCK))}, circulant)")
    fn, arity = _STOCK[name]
    if len(args) != arity:
        raise CliError(f"{name} wants {arity} argument(s), got {len(args)}")
    return fn(*(int(a) for a in args))


def load_graph(args) -> Graph:
    if getattr(args, "graph_file", None):
        with open(args.graph_file) as fh:
            return Graph.from_json(fh.read())
    if getattr(args, "stock", None):
        return parse_graph_spec(args.stock)
    raise CliError("a graph source is required (--graph-file or --stock)")


def load_profile(args, game: GameSpec) -> Profile:
    if getattr(args, "profile_file", None):
        with open(args.profile_file) as fh:
            p = Profile.from_json(game.n, fh.read())
    elif getattr(args, "blue", None):
        p = Profile.from_blue_nodes(game.n, [int(v) for v in args.blue.split(",")])
    else:
        raise CliError("a profile source is required (--profile-file or --blue)")
    validate_profile(game, p)
    return p


def _game(args) -> GameSpec:
    return GameSpec(load_graph(args), args.b, parse_peak(args.peak))


def _config_dict(args) -> dict:
    skip = {"func", "out"}
    return {k: v for k, v in sorted(vars(args).items())
            if k not in skip and v is not None}


def _emit(args, payload: dict) -> None:
    doc = {"version": __version__, "config": _config_dict(args), **payload}
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_game_args(p: _Parser, profile: bool = False) -> None:
    p.add_argument("--graph-file", help="graph JSON file ({'n':…, 'edges':…})")
    p.add_argument("--stock", help="stock graph shorthand, e.g. ring:6 or "
                   "random-regular:10,3,7")
    p.add_argument("--b", type=int, required=True, help="number of blue agents")
    p.add_argument("--peak", required=True, help='utility peak as "p/q" in (0,1)')
    if profile:
        p.add_argument("--profile-file", help='profile JSON ({"blue": […]})')
        p.add_argument("--blue", help="comma-separated blue nodes")
    p.add_argument("-o", "--out", help="output JSON path (default stdout)")


# -- subcommands -----------------------------------------------------------

def cmd_generate(args) -> int:
    lam = parse_peak(args.peak) if args.peak else None
    name = args.name
    if name == "no-se-ring":
        inst = gallery.no_se_ring(lam or Fraction(2, 3))
    elif name == "poa-ring":
        inst = gallery.poa_ring_instance(args.b, lam or Fraction(1, 2))
    elif name == "poa-regular":
        inst = gallery.poa_regular_instance(args.delta, args.n_prime,
                                            lam or Fraction(1, 2))
    elif name == "pos-general":
        inst = gallery.pos_general_instance(args.q, args.b, lam or Fraction(1, 2))
    elif name == "pos-bipartite":
        inst = gallery.pos_bipartite_instance(args.b)
    elif name == "dominating-set":
        inst = gallery.dominating_set_reduction(load_graph(args), args.k,
                                                lam or Fraction(1, 4))
    elif name == "vertex-cover":
        inst = gallery.vertex_cover_reduction(load_graph(args), args.k,
                                              lam or Fraction(1, 2))
    else:
        raise CliError(f"unknown instance {name!r}")
    g = inst.game
    _emit(args, {
        "instance": inst.name,
        "graph": json.loads(g.graph.to_json()),
        "b": g.b,
        "peak": f"{g.peak.numerator}/{g.peak.denominator}",
        "profiles": {tag: list(p.blue_nodes()) for tag, p in inst.profiles.items()},
        "expected": inst.expected,
    })
    return EXIT_OK


def cmd_dynamics(args) -> int:
    game = _game(args)
    start = load_profile(args, game)
    if args.max_steps < 1:
        raise CliError("--max-steps must be at least 1")
    outcome = run_dynamics(game, start, SwapPolicy(args.policy),
                           max_steps=args.max_steps, seed=args.seed)
    if args.trace:
        with open(args.trace, "w") as fh:
            for st in outcome.trace:
                fh.write(json.dumps({
                    "step": st.step, "move": [st.move.u, st.move.v],
                    "phi_before": st.phi_before, "phi_after": st.phi_after,
                    "doi_after": st.doi_after,
                }) + "\n")
    _emit(args, outcome.to_json_dict())
    return {
        OutcomeKind.CONVERGED: EXIT_OK,
        OutcomeKind.CYCLE_DETECTED: EXIT_CYCLE,
        OutcomeKind.BUDGET_EXHAUSTED: EXIT_BUDGET,
    }[outcome.kind]


def cmd_analyze(args) -> int:
    game = _game(args)
    try:
        report = enumerate_equilibria(game, budget=args.budget)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(args, report.to_json_dict())
    if any(not c.satisfied for c in report.bound_checks):
        print("bound-check violation (see report)", file=sys.stderr)
        return EXIT_BOUND
    return EXIT_OK


def cmd_construct(args) -> int:
    game = _game(args)
    algo = args.algorithm
    try:
        if algo == "independent-set":
            sides = game.graph.bipartition()
            if sides is None:
                raise CliError("independent-set construction needs a bipartite graph")
            small, large = sides
            side = small if len(small) in (game.b, game.n - game.b) else large
            profile = construct.independent_set_placement(game, side)
        elif algo == "bipartite-from-optimum":
            opt = load_profile(args, game)
            profile = construct.bipartite_se_from_optimum(game, opt)
        elif algo == "phi-minimum":
            mode = construct.PhiMode(args.mode)
            start = None
            if args.blue or args.profile_file:
                start = load_profile(args, game)
            profile = construct.phi_minimum_profile(game, mode, start=start,
                                                    budget=args.budget)
        elif algo == "se-repair":
            start = load_profile(args, game)
            profile = construct.se_repair_bounded_degree(game, start)
        elif algo == "hierarchical":
            opt = load_profile(args, game)
            result = construct.hierarchical_pos_construction(game, opt)
            profile = result.profile
        else:
            raise CliError(f"unknown algorithm {algo!r}")
    except construct.GuardFailure as exc:
        print(f"guard failed: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (construct.ConstructionError, ModelError, GraphError) as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ok, _ = is_swap_equilibrium(game, profile)
    payload = {
        "algorithm": algo,
        "profile": {"blue": list(profile.blue_nodes())},
        "certificate": {
            "is_se": ok,
            "doi": doi(profile, game.graph),
            "phi": potential(profile, game.graph),
        },
    }
    if algo == "hierarchical":
        payload["branch"] = result.branch
        payload["guards"] = [{"name": g, "passed": v} for g, v in result.guards]
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_BOUND


def cmd_export_dot(args) -> int:
    g = load_graph(args)
    blue = None
    segregated = None
    if args.blue or args.profile_file:
        game = GameSpec(g, args.b, parse_peak(args.peak))
        p = load_profile(args, game)
        blue = set(p.blue_nodes())
        from .model import segregated_nodes
        segregated = segregated_nodes(p, g)
    text = g.to_dot(blue_nodes=blue, segregated=segregated)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_hunt(args) -> int:
    """Random-corpus search for games without any swap equilibrium.

    Whether an SE always exists for peaks at most 1/2 on arbitrary graphs
    is open; this scans seeded random games and reports any miss.
    """
    lam = parse_peak(args.peak)
    misses = []
    scanned = 0
    for i in range(args.count):
        seed = args.seed + i
        try:
            if args.almost_regular:
                g = gallery.random_almost_regular(args.n, args.degree, seed)
            else:
                g = gallery.random_regular(args.n, args.degree, seed)
        except gallery.GeneratorError:
            continue
        for b in range(1, g.n // 2 + 1):
            game = GameSpec(g, b, lam)
            try:
                res = core.sweep_game(game, budget=args.budget)
            except BudgetExceededError:
                continue
            scanned += 1
            if res.se_count == 0:
                misses.append({"seed": seed, "n": g.n, "b": b,
                               "edges": [list(e) for e in g.edges]})
    _emit(args, {"games_scanned": scanned, "games_without_se": misses})
    if misses:
        print(f"{len(misses)} game(s) without SE found", file=sys.stderr)
        return EXIT_BOUND
    return EXIT_OK


# -- entry point -----------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="peakswap",
                     description="Single-peaked swap games on graphs: "
                                 "dynamics, exact equilibrium analysis, "
                                 "constructions and benchmark instances.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a named benchmark instance bundle")
    p.add_argument("name", choices=["no-se-ring", "poa-ring", "poa-regular",
                                    "pos-general", "pos-bipartite",
                                    "dominating-set", "vertex-cover"])
    p.add_argument("--b", type=int, default=2, help="number of blue agents")
    p.add_argument("--peak", help='peak "p/q" (instance default if omitted)')
    p.add_argument("--delta", type=int, default=2, help="degree (poa-regular)")
    p.add_argument("--n-prime", type=int, default=5,
                   help="third-gadget size (poa-regular)")
    p.add_argument("--q", type=int, default=2, help="star size (pos-general)")
    p.add_argument("--k", type=int, default=1, help="parameter of the reductions")
    p.add_argument("--graph-file", help="cubic input graph (reductions)")
    p.add_argument("--stock", help="cubic input graph shorthand (reductions)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("dynamics", help="run improving-response dynamics")
    _add_game_args(p, profile=True)
    p.add_argument("--policy", default="first-lex",
                   choices=[pol.value for pol in SwapPolicy])
    p.add_argument("--max-steps", type=int, default=10_000)
    p.add_argument("--seed", type=int, help="rng seed (uniform-random policy)")
    p.add_argument("--trace", help="JSONL trace output path")
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser("analyze", help="exhaustive equilibrium enumeration + report")
    _add_game_args(p)
    p.add_argument("--budget", type=int,
                   help="profile-space cap (default PEAKSWAP_ENUM_BUDGET or 10^7)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="run a constructive algorithm, "
                                         "emit profile + certificate")
    p.add_argument("algorithm", choices=["independent-set",
                                         "bipartite-from-optimum",
                                         "phi-minimum", "se-repair",
                                         "hierarchical"])
    _add_game_args(p, profile=True)
    p.add_argument("--mode", default="global",
                   choices=[m.value for m in construct.PhiMode],
                   help="phi-minimum search mode")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("export-dot", help="write a Graphviz rendering of a "
                                          "graph, optionally colored by profile")
    p.add_argument("--graph-file")
    p.add_argument("--stock")
    p.add_argument("--b", type=int, help="needed when coloring a profile")
    p.add_argument("--peak", default="1/2")
    p.add_argument("--profile-file")
    p.add_argument("--blue", help="comma-separated blue nodes")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("hunt", help="random-corpus search for games with no SE")
    p.add_argument("--count", type=int, default=20, help="graphs to try")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--almost-regular", action="store_true")
    p.add_argument("--peak", default="1/2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_hunt)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ModelError, GraphError, gallery.GeneratorError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
