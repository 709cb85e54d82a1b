"""Tabulate the belief-ESS family of a hawk-dove game across interval widths.

For each half-width delta from 0 to min(p*, 1 - p*) the script prints the
committed masses, the selection-probability interval, the hawk/dove
indifference gap against the resident, and whether the stability check
passes. Delta = 0 is the mixed ESS; delta = max is the vacuous interval.
"""

import argparse

from belief_ess import (
    HawkDoveParams,
    PureStrategy,
    expected_payoff,
    find_belief_ess,
    find_mixed_ess,
    hawk_dove,
    max_delta,
    verify_ess,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--resource", "-v", type=float, default=2.0, help="contested value V")
    parser.add_argument("--cost", "-c", type=float, default=4.0, help="injury cost C")
    parser.add_argument("--steps", type=int, default=10, help="delta grid resolution")
    args = parser.parse_args()

    game = hawk_dove(HawkDoveParams(args.resource, args.cost))
    mixed = find_mixed_ess(game)
    if not mixed.found:
        parser.exit(2, f"no interior mixed ESS: {mixed.rejection}\n")
    bound = max_delta(game)
    print(f"hawk-dove V={args.resource:g} C={args.cost:g}: p* = {mixed.strategy.p:.12g}, "
          f"max delta = {bound:.12g}")
    print(f"{'delta':>8} {'m(H)':>8} {'m(D)':>8} {'m(HD)':>8} "
          f"{'interval':>18} {'indiff gap':>12} {'stable':>7}")
    for k in range(args.steps + 1):
        delta = bound * k / args.steps
        j = find_belief_ess(game, delta)
        gap = (
            expected_payoff(game, PureStrategy(0), j).value
            - expected_payoff(game, PureStrategy(1), j).value
        )
        stable = verify_ess(game, j).stable
        interval = f"[{j.lower:.4f}, {j.upper:.4f}]"
        print(f"{delta:8.4f} {j.mass0:8.4f} {j.mass1:8.4f} {j.ambiguous_mass:8.4f} "
              f"{interval:>18} {gap:12.3e} {'yes' if stable else 'no':>7}")


if __name__ == "__main__":
    main()
