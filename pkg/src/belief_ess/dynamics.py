"""Discrete replicator dynamics for finite rosters of strategies.

Each step reweights population shares by fitness (expected payoff against
the current mix), shifted so the worst strategy keeps a sliver of positive
weight: w_i = x_i * (f_i - min(f) + 1e-9). The shift makes the map well
defined for payoff matrices with negative entries; its side effect is that
a strategy at a strict fitness disadvantage collapses fast, so invasion
verdicts arrive in few steps rather than asymptotically.

Shares below 1e-12 after a step are clamped to zero (extinct for good) and
the vector is renormalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .games import SymmetricGame2
from .payoffs import expected_payoff, mc_expected_payoff
from .strategies import Strategy, describe

FITNESS_SHIFT = 1e-9
EXTINCTION_CLAMP = 1e-12
EXTINCT_THRESHOLD = 1e-6
FIXATION_THRESHOLD = 1.0 - 1e-6
STATIONARY_THRESHOLD = 1e-12
SHARE_SUM_TOL = 1e-9

VERDICT_EXTINCT = "invader_extinct"
VERDICT_FIXATED = "invader_fixated"
VERDICT_COEXISTENCE = "coexistence"
VERDICT_MAX_STEPS = "max_steps"


class DynamicsError(ValueError):
    """Base class for dynamics failures."""


class EmptyRoster(DynamicsError):
    """A population needs at least one strategy."""


@dataclass(frozen=True)
class PopulationState:
    """Population shares over a fixed roster; nonnegative, summing to one."""

    shares: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.shares:
            raise EmptyRoster("population has no strategies")
        if any(s < 0 for s in self.shares):
            raise DynamicsError(f"negative share in {self.shares}")
        total = sum(self.shares)
        if abs(total - 1.0) > SHARE_SUM_TOL:
            raise DynamicsError(f"shares sum to {total!r}, expected 1 within {SHARE_SUM_TOL}")


def payoff_matrix(game: SymmetricGame2, roster: Sequence[Strategy]) -> np.ndarray:
    """Closed-form expected payoff of each roster member against each other."""
    if len(roster) == 0:
        raise EmptyRoster("roster has no strategies")
    k = len(roster)
    matrix = np.empty((k, k))
    for r, row in enumerate(roster):
        for c, col in enumerate(roster):
            matrix[r, c] = expected_payoff(game, row, col).value
    return matrix


def _step(matrix: np.ndarray, shares: np.ndarray) -> np.ndarray:
    fitness = matrix @ shares
    weights = shares * (fitness - fitness.min() + FITNESS_SHIFT)
    weights /= weights.sum()
    weights[weights < EXTINCTION_CLAMP] = 0.0
    return weights / weights.sum()


def _as_floats(shares: np.ndarray) -> tuple[float, ...]:
    return tuple(float(s) for s in shares)


def replicator_step(
    game: SymmetricGame2, roster: Sequence[Strategy], pop: PopulationState
) -> PopulationState:
    """Advance the population one generation."""
    if len(roster) != len(pop.shares):
        raise DynamicsError(f"roster size {len(roster)} != population size {len(pop.shares)}")
    matrix = payoff_matrix(game, roster)
    return PopulationState(_as_floats(_step(matrix, np.asarray(pop.shares))))


@dataclass(frozen=True)
class Trajectory:
    """Recorded invasion run: sampled shares plus the stopping verdict."""

    roster: tuple[str, ...]
    steps: tuple[tuple[int, tuple[float, ...]], ...]
    verdict: str

    @property
    def final(self) -> tuple[float, ...]:
        return self.steps[-1][1]

    @property
    def n_steps(self) -> int:
        return self.steps[-1][0]

    def to_text(self) -> str:
        lines = ["step," + ",".join(f"share_{i}" for i in range(len(self.roster)))]
        for step, shares in self.steps:
            lines.append(f"{step}," + ",".join(format(s, ".12g") for s in shares))
        lines.append(f"verdict,{self.verdict}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "roster": list(self.roster),
            "steps": [{"step": s, "shares": list(x)} for s, x in self.steps],
            "verdict": self.verdict,
            "final": list(self.final),
            "n_steps": self.n_steps,
        }


def _verdict(shares: np.ndarray, delta: float) -> str | None:
    if shares[1] < EXTINCT_THRESHOLD:
        return VERDICT_EXTINCT
    if shares[1] > FIXATION_THRESHOLD:
        return VERDICT_FIXATED
    if delta < STATIONARY_THRESHOLD:
        return VERDICT_COEXISTENCE
    return None


def invasion_experiment(
    game: SymmetricGame2,
    resident: Strategy,
    mutant: Strategy,
    epsilon: float = 0.01,
    max_steps: int = 100_000,
    record_stride: int = 100,
    *,
    sampled: bool = False,
    mc_samples: int = 1000,
    seed: int | None = None,
) -> Trajectory:
    """Drop a mutant at share epsilon into a resident population and iterate.

    Stops when the mutant share falls below 1e-6 (extinct), rises above
    1 - 1e-6 (fixated), or the map reaches a fixed point (coexistence);
    otherwise runs max_steps. Records shares at step 0, every record_stride
    steps, and the final step.

    With sampled=True the payoff matrix is re-estimated each generation by
    Monte Carlo (mc_samples draws per matrix entry, independent substreams
    derived from seed), modeling noisy fitness measurement; the default uses
    the closed-form matrix once.
    """
    if not 0.0 < epsilon < 0.5:
        raise DynamicsError(f"epsilon must be in (0, 0.5), got {epsilon}")
    if max_steps < 1:
        raise DynamicsError(f"max_steps must be >= 1, got {max_steps}")
    if record_stride < 1:
        raise DynamicsError(f"record_stride must be >= 1, got {record_stride}")
    if sampled and mc_samples < 1:
        raise DynamicsError(f"mc_samples must be >= 1, got {mc_samples}")
    roster = (resident, mutant)
    names = tuple(describe(s, game.labels) for s in roster)
    matrix = payoff_matrix(game, roster)
    seed_seq = np.random.SeedSequence(seed) if sampled else None

    def sampled_matrix(step: int) -> np.ndarray:
        out = np.empty((2, 2))
        children = seed_seq.spawn(1)[0].generate_state(4)
        for idx, (r, c) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
            result = mc_expected_payoff(
                game, roster[r], roster[c], mc_samples, int(children[idx])
            )
            out[r, c] = result.value
        return out

    shares = np.array([1.0 - epsilon, epsilon])
    records = [(0, _as_floats(shares))]
    verdict = VERDICT_MAX_STEPS
    for step in range(1, max_steps + 1):
        if sampled:
            matrix = sampled_matrix(step)
        new_shares = _step(matrix, shares)
        delta = np.abs(new_shares - shares).max()
        shares = new_shares
        stop = _verdict(shares, delta)
        recorded = step % record_stride == 0
        if recorded:
            records.append((step, _as_floats(shares)))
        if stop is not None:
            verdict = stop
            if not recorded:
                records.append((step, _as_floats(shares)))
            break
    else:
        if records[-1][0] != max_steps:
            records.append((max_steps, _as_floats(shares)))
    return Trajectory(names, tuple(records), verdict)
