"""Command-line front end: solve, verify, payoff, and simulate subcommands.

Every command accepts the game either as a TOML file (--game) or as inline
Hawk-Dove parameters (--hawk-dove "V=2,C=4"). Reports print as aligned text
by default or as JSON with --json; both render floats through repr-stable
formatting, so identical inputs produce byte-identical output.

Exit codes: 0 on success (ESS found / resident stable), 1 on bad input,
2 when the analysis completes but finds no ESS or an unstable resident.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import dynamics, solver
from .games import GameError, HawkDoveParams, SymmetricGame2, hawk_dove, load_game
from .payoffs import expected_payoff, mc_expected_payoff
from .strategies import Strategy, as_belief, describe, parse_strategy_spec

DEFAULT_SEED = 0
SEED_ENV_VAR = "BELIEF_ESS_SEED"

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NEGATIVE = 2


@dataclass(frozen=True)
class RunConfig:
    """Options shared by every subcommand."""

    game: SymmetricGame2
    tol: float
    as_json: bool
    output: str | None
    seed: int


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _parse_hawk_dove(text: str) -> SymmetricGame2:
    fields = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep:
            raise GameError(f"expected K=V pairs in --hawk-dove, got {part!r}")
        fields[key.strip()] = value.strip()
    if set(fields) != {"V", "C"}:
        raise GameError(f"--hawk-dove needs exactly V and C, got {sorted(fields)}")
    try:
        v, c = float(fields["V"]), float(fields["C"])
    except ValueError:
        raise GameError(f"--hawk-dove values must be numbers, got {text!r}") from None
    return hawk_dove(HawkDoveParams(resource_value=v, injury_cost=c))


def _resolve_seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise GameError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _build_config(args: argparse.Namespace) -> RunConfig:
    if args.game is not None:
        game = load_game(args.game)
    else:
        game = _parse_hawk_dove(args.hawk_dove)
    if args.tol < 0:
        raise GameError(f"--tol must be >= 0, got {args.tol}")
    return RunConfig(game, args.tol, args.json, args.output, _resolve_seed(args.seed))


def _emit(config: RunConfig, text: str) -> None:
    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_report(config: RunConfig, payload: dict, text: str) -> None:
    if config.as_json:
        _emit(config, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        _emit(config, text)


def _game_header(game: SymmetricGame2) -> list[str]:
    a, b = game.labels
    lines = [f"game: {a}/{b}"]
    for i, row in enumerate(game.payoffs):
        lines.append(
            f"  E({game.labels[i]},{a}) = {_fmt(row[0])}   "
            f"E({game.labels[i]},{b}) = {_fmt(row[1])}"
        )
    return lines


def _solve_text(report: solver.EssReport) -> str:
    lines = _game_header(report.game)
    lines.append(f"tolerance: {_fmt(report.tolerance)}")
    for decision in report.pure:
        lines.append(f"pure {decision.label}: {decision.verdict}")
        for m in decision.margins:
            lines.append(f"  {m.label}: {_fmt(m.lhs)} vs {_fmt(m.rhs)} (slack {_fmt(m.slack)})")
    if report.mixed.found:
        lines.append(f"mixed: p = {_fmt(report.mixed.strategy.p)}")
        for m in report.mixed.margins:
            lines.append(f"  {m.label}: {_fmt(m.lhs)} vs {_fmt(m.rhs)} (slack {_fmt(m.slack)})")
    else:
        lines.append(f"mixed: none ({report.mixed.rejection})")
    if report.belief is not None:
        b = report.belief
        lines.append(
            f"belief: masses ({_fmt(b.strategy.mass0)}, {_fmt(b.strategy.mass1)}, "
            f"{_fmt(b.strategy.ambiguous_mass)}) interval "
            f"[{_fmt(b.strategy.lower)}, {_fmt(b.strategy.upper)}]"
        )
        lines.append(f"  delta = {_fmt(b.delta)} of max {_fmt(b.delta_max)}")
        lines.append(f"  verified stable: {'yes' if b.verification.stable else 'no'}")
    else:
        lines.append(f"belief: skipped ({report.belief_skipped})")
    lines.append(f"any ESS: {'yes' if report.any_ess else 'no'}")
    return "\n".join(lines) + "\n"


def _cmd_solve(config: RunConfig, args: argparse.Namespace) -> int:
    report = solver.classify(config.game, delta=args.delta, tol=config.tol)
    _emit_report(config, report.to_dict(), _solve_text(report))
    return EXIT_OK if report.any_ess else EXIT_NEGATIVE


def _verify_text(report: solver.VerificationReport, game: SymmetricGame2) -> str:
    lines = _game_header(game)
    r = report.resident
    lines.append(
        f"resident: belief masses ({_fmt(r.mass0)}, {_fmt(r.mass1)}, {_fmt(r.ambiguous_mass)})"
        f" interval [{_fmt(r.lower)}, {_fmt(r.upper)}]"
    )
    for check in report.checks:
        lines.append(f"invader {check.invader}: {check.verdict} [{check.branch}]")
        lines.append(
            f"  {_fmt(check.lhs)} vs {_fmt(check.rhs)} (slack {_fmt(check.slack)})"
        )
    lines.append(f"stable: {'yes' if report.stable else 'no'}")
    return "\n".join(lines) + "\n"


def _cmd_verify(config: RunConfig, args: argparse.Namespace) -> int:
    game = config.game
    resident = parse_strategy_spec(args.strategy, game.labels)
    invaders: list[Strategy] | None
    if args.invader:
        invaders = [parse_strategy_spec(spec, game.labels) for spec in args.invader]
    else:
        invaders = None
    report = solver.verify_ess(game, as_belief(resident), invaders, tol=config.tol)
    payload = report.to_dict()
    text = _verify_text(report, game)
    if args.sweep_mixed:
        sweep = solver.invader_sweep(game, as_belief(resident), args.sweep_mixed, config.tol)
        n_unstable = sum(1 for c in sweep if not c.stable)
        payload["sweep"] = {
            "count": len(sweep),
            "unstable": n_unstable,
            "checks": [c.to_dict() for c in sweep],
        }
        text += f"sweep: {len(sweep)} mixed invaders, {n_unstable} unstable (advisory only)\n"
    _emit_report(config, payload, text)
    return EXIT_OK if report.stable else EXIT_NEGATIVE


def _cmd_payoff(config: RunConfig, args: argparse.Namespace) -> int:
    game = config.game
    row = parse_strategy_spec(args.row, game.labels)
    col = parse_strategy_spec(args.col, game.labels)
    exact = expected_payoff(game, row, col)
    payload = {
        "row": describe(row, game.labels),
        "col": describe(col, game.labels),
        "closed_form": {"method": exact.method, "value": exact.value},
    }
    lines = _game_header(game)
    lines.append(f"row: {describe(row, game.labels)}")
    lines.append(f"col: {describe(col, game.labels)}")
    lines.append(f"closed form: {_fmt(exact.value)}")
    if args.mc:
        estimate = mc_expected_payoff(game, row, col, args.mc, config.seed)
        payload["monte_carlo"] = {
            "method": estimate.method,
            "value": estimate.value,
            "stderr": estimate.stderr,
            "samples": args.mc,
            "seed": config.seed,
        }
        lines.append(
            f"monte carlo ({args.mc} samples, seed {config.seed}): "
            f"{_fmt(estimate.value)} +/- {_fmt(estimate.stderr)}"
        )
    _emit_report(config, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_simulate(config: RunConfig, args: argparse.Namespace) -> int:
    game = config.game
    resident = parse_strategy_spec(args.resident, game.labels)
    mutant = parse_strategy_spec(args.mutant, game.labels)
    trajectory = dynamics.invasion_experiment(
        game,
        resident,
        mutant,
        epsilon=args.epsilon,
        max_steps=args.max_steps,
        record_stride=args.stride,
        sampled=args.sampled,
        mc_samples=args.mc_samples,
        seed=config.seed,
    )
    if config.as_json:
        _emit(config, json.dumps(trajectory.to_dict(), indent=2, sort_keys=True) + "\n")
    else:
        _emit(config, trajectory.to_text())
    if config.output is not None:
        sys.stdout.write(f"verdict: {trajectory.verdict}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="belief-ess",
        description="Evolutionarily stable strategies for symmetric 2x2 games, "
        "including belief-interval strategies with committed and ambiguous mass.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("--game", metavar="PATH", help="TOML game description")
        source.add_argument(
            "--hawk-dove",
            metavar="SPEC",
            help='inline Hawk-Dove parameters, e.g. "V=2,C=4"',
        )
        p.add_argument("--tol", type=float, default=solver.DEFAULT_TOL, help="strictness tolerance")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--output", metavar="PATH", help="write the report to a file")
        p.add_argument(
            "--seed",
            type=int,
            default=None,
            help=f"RNG seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED})",
        )

    p_solve = sub.add_parser("solve", help="classify pure, mixed, and belief ESS")
    add_common(p_solve)
    p_solve.add_argument(
        "--delta", type=float, default=0.0, help="belief interval half-width (default 0)"
    )
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="check a strategy against invaders")
    add_common(p_verify)
    p_verify.add_argument(
        "--strategy", required=True, metavar="SPEC", help="resident, e.g. belief=0.3,0.3"
    )
    p_verify.add_argument(
        "--invader",
        action="append",
        metavar="SPEC",
        help="invader to test (repeatable; default: both pure strategies)",
    )
    p_verify.add_argument(
        "--sweep-mixed",
        type=int,
        default=0,
        metavar="K",
        help="also sweep K evenly spaced mixed invaders (advisory)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_payoff = sub.add_parser("payoff", help="expected payoff of one strategy against another")
    add_common(p_payoff)
    p_payoff.add_argument("--row", required=True, metavar="SPEC", help="row strategy")
    p_payoff.add_argument("--col", required=True, metavar="SPEC", help="column strategy")
    p_payoff.add_argument(
        "--mc", type=int, default=0, metavar="N", help="also estimate from N sampled encounters"
    )
    p_payoff.set_defaults(func=_cmd_payoff)

    p_sim = sub.add_parser("simulate", help="replicator-dynamics invasion experiment")
    add_common(p_sim)
    p_sim.add_argument("--resident", required=True, metavar="SPEC", help="resident strategy")
    p_sim.add_argument("--mutant", required=True, metavar="SPEC", help="invading strategy")
    p_sim.add_argument("--epsilon", type=float, default=0.01, help="initial mutant share")
    p_sim.add_argument("--max-steps", type=int, default=100_000, help="step budget")
    p_sim.add_argument("--stride", type=int, default=100, help="record every Nth step")
    p_sim.add_argument(
        "--sampled", action="store_true", help="re-estimate payoffs by Monte Carlo each step"
    )
    p_sim.add_argument(
        "--mc-samples", type=int, default=1000, help="samples per payoff in --sampled mode"
    )
    p_sim.set_defaults(func=_cmd_simulate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command: Callable[[RunConfig, argparse.Namespace], int] = args.func
    try:
        config = _build_config(args)
        return command(config, args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
