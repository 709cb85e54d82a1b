"""Expected payoffs for every strategy-type pairing.

Closed forms
------------
Against a belief strategy, the opponent's weight on strategy 0 is modeled as
a uniform draw t from the strategy's interval [lower, upper]. Averaging the
bilinear payoff over that draw leaves only the interval midpoint:

    E[s vs J] = (E(s,0) - E(s,1)) * midpoint(J) + E(s,1)
    E[J vs t] = (E(0,t) - E(1,t)) * midpoint(J) + E(1,t)

Degenerate intervals need no special case: the midpoint form never divides
by the interval width. Belief-vs-belief uses independent draws for the two
players, so the bilinear payoff again reduces to the two midpoints.

Monte-Carlo oracle
------------------
mc_expected_payoff replays the model literally: per trial it draws each
player's weight uniformly from that player's interval, then draws the actual
pure actions from those weights, and averages the realized payoffs. The
generator is numpy's PCG64 (numpy.random.default_rng); for a fixed (n, seed)
the draw order is t_row, t_col, u_row, u_col in blocks of n, so results are
bit-reproducible on one platform. Runs are single-threaded; a parallel
variant would have to derive per-worker substreams with
numpy.random.SeedSequence(seed).spawn(workers) to keep that contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .games import SymmetricGame2
from .strategies import BeliefStrategy, MixedStrategy, PureStrategy, Strategy, as_belief

CLOSED_FORM = "closed_form"
MONTE_CARLO = "monte_carlo"


class ZeroSamples(ValueError):
    """Monte-Carlo estimation needs at least one sample."""


@dataclass(frozen=True)
class PayoffResult:
    """An expected payoff plus how it was obtained.

    stderr is the Monte-Carlo standard error of the mean and is present
    exactly when method is "monte_carlo".
    """

    value: float
    method: str
    stderr: float | None = None

    def __post_init__(self) -> None:
        if (self.method == MONTE_CARLO) != (self.stderr is not None):
            raise ValueError(f"stderr must be present iff method is {MONTE_CARLO!r}")
        if self.stderr is not None and self.stderr < 0:
            raise ValueError(f"stderr must be non-negative, got {self.stderr}")


def _bilinear(game: SymmetricGame2, w_row: float, w_col: float) -> float:
    """Expected payoff when both players independently weight strategy 0."""
    (e00, e01), (e10, e11) = game.payoffs
    return (
        w_row * w_col * e00
        + w_row * (1.0 - w_col) * e01
        + (1.0 - w_row) * w_col * e10
        + (1.0 - w_row) * (1.0 - w_col) * e11
    )


def expected_mixed_vs_mixed(
    game: SymmetricGame2, row: MixedStrategy, col: MixedStrategy
) -> PayoffResult:
    """Bilinear expansion over the four pure outcomes."""
    return PayoffResult(_bilinear(game, row.p, col.p), CLOSED_FORM)


def expected_pure_vs_belief(
    game: SymmetricGame2, row: PureStrategy, col: BeliefStrategy
) -> PayoffResult:
    """Payoff of a pure strategy against a uniformly drawn opponent weight."""
    s = row.index
    value = (game.payoff(s, 0) - game.payoff(s, 1)) * col.midpoint + game.payoff(s, 1)
    return PayoffResult(value, CLOSED_FORM)


def expected_belief_vs_pure(
    game: SymmetricGame2, row: BeliefStrategy, col: PureStrategy
) -> PayoffResult:
    """Payoff of a uniformly drawn own weight against a fixed pure opponent."""
    t = col.index
    value = (game.payoff(0, t) - game.payoff(1, t)) * row.midpoint + game.payoff(1, t)
    return PayoffResult(value, CLOSED_FORM)


def expected_belief_vs_belief(
    game: SymmetricGame2, row: BeliefStrategy, col: BeliefStrategy
) -> PayoffResult:
    """Independent uniform draws for both players; bilinear at the midpoints."""
    return PayoffResult(_bilinear(game, row.midpoint, col.midpoint), CLOSED_FORM)


def expected_payoff(game: SymmetricGame2, row: Strategy, col: Strategy) -> PayoffResult:
    """Closed-form expected payoff for any pairing of strategy levels."""
    if isinstance(row, PureStrategy) and isinstance(col, PureStrategy):
        return PayoffResult(game.payoff(row.index, col.index), CLOSED_FORM)
    if isinstance(row, PureStrategy) and isinstance(col, BeliefStrategy):
        return expected_pure_vs_belief(game, row, col)
    if isinstance(row, BeliefStrategy) and isinstance(col, PureStrategy):
        return expected_belief_vs_pure(game, row, col)
    return expected_belief_vs_belief(game, as_belief(row), as_belief(col))


def _draw_weights(rng: np.random.Generator, j: BeliefStrategy, n: int) -> np.ndarray:
    # Always consumes exactly n draws so the documented draw order holds for
    # every strategy. An interval whose width rounds to <= 0 is a point mass
    # at the midpoint.
    u = rng.random(n)
    if j.width <= 0.0:
        return np.full(n, j.midpoint)
    return j.lower + j.width * u


def mc_expected_payoff(
    game: SymmetricGame2,
    row: Strategy,
    col: Strategy,
    n: int,
    seed: int,
) -> PayoffResult:
    """Monte-Carlo estimate of the expected payoff under the draw model.

    Pure and mixed strategies are treated as point-mass intervals. Per
    trial: draw each player's strategy-0 weight uniformly from that player's
    interval, draw the two pure actions from those weights, and score the
    row player's payoff. Returns the sample mean and its standard error;
    deterministic for a fixed (n, seed).
    """
    n = int(n)
    if n < 1:
        raise ZeroSamples(f"sample count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    t_row = _draw_weights(rng, as_belief(row), n)
    t_col = _draw_weights(rng, as_belief(col), n)
    act_row = (rng.random(n) >= t_row).astype(np.intp)  # 0 = strategy 0
    act_col = (rng.random(n) >= t_col).astype(np.intp)
    matrix = np.asarray(game.payoffs, dtype=np.float64)
    samples = matrix[act_row, act_col]
    mean = float(samples.mean())
    stderr = float(samples.std(ddof=1) / sqrt(n)) if n > 1 else 0.0
    return PayoffResult(mean, MONTE_CARLO, stderr)
