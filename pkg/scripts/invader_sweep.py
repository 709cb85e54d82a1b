"""Stress a belief-ESS resident against a grid of mixed invaders plus dynamics.

Static half: sweep evenly spaced mixed invaders through the second-order
stability check and summarize the verdicts (the invader at exactly p* is
neutral; everything else should be stable). Dynamic half: run replicator
invasion experiments with each pure strategy as the mutant and report how
fast the invader dies out.
"""

import argparse
from collections import Counter

from belief_ess import (
    HawkDoveParams,
    PureStrategy,
    find_belief_ess,
    hawk_dove,
    invader_sweep,
    invasion_experiment,
    max_delta,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--resource", "-v", type=float, default=2.0, help="contested value V")
    parser.add_argument("--cost", "-c", type=float, default=4.0, help="injury cost C")
    parser.add_argument("--delta", type=float, default=0.2, help="interval half-width")
    parser.add_argument("--count", type=int, default=99, help="number of mixed invaders")
    parser.add_argument("--epsilon", type=float, default=0.01, help="initial mutant share")
    args = parser.parse_args()

    game = hawk_dove(HawkDoveParams(args.resource, args.cost))
    bound = max_delta(game)
    if not 0 <= args.delta <= bound:
        parser.exit(2, f"delta must lie in [0, {bound:.12g}]\n")
    resident = find_belief_ess(game, args.delta)
    print(f"resident: interval [{resident.lower:.12g}, {resident.upper:.12g}] "
          f"(delta={args.delta:g})")

    checks = invader_sweep(game, resident, count=args.count)
    tally = Counter(c.verdict for c in checks)
    print(f"static sweep over {args.count} mixed invaders: "
          + ", ".join(f"{v} {k}" for k, v in sorted(tally.items())))
    worst = min(checks, key=lambda c: c.slack)
    print(f"  smallest slack {worst.slack:.3e} at invader {worst.invader}")

    print("replicator invasions (pure mutants):")
    for index in (0, 1):
        mutant = PureStrategy(index)
        run = invasion_experiment(game, resident, mutant, epsilon=args.epsilon)
        print(f"  mutant pure {game.labels[index]}: {run.verdict} after {run.n_steps} steps, "
              f"final shares {tuple(round(s, 6) for s in run.final)}")


if __name__ == "__main__":
    main()
