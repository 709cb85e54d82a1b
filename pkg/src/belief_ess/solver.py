"""Find and verify pure, mixed, and belief-interval ESS for a symmetric 2x2 game.

Stability conditions are strict inequalities on exact reals; under floating
point they are applied as ``lhs > rhs + tol`` with one configurable tolerance
(default 1e-9). A first-order comparison that lands within the tolerance is a
tie and routes to the second-order condition; a tie there as well yields the
verdict "neutrally stable", which is not an ESS at that tolerance.

The belief-interval ESS is a one-parameter family around the mixed-ESS
probability p*: for any half-width delta with 0 <= delta <= min(p*, 1 - p*),
committing mass p* - delta to strategy 0 and 1 - p* - delta to strategy 1
(leaving 2 * delta ambiguous) keeps both pure strategies exactly indifferent
against it. Delta is a free input measuring how much uncertainty the
strategy tolerates, not something the solver optimizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .games import SymmetricGame2
from .payoffs import expected_payoff
from .strategies import (
    BeliefStrategy,
    MixedStrategy,
    PureStrategy,
    Strategy,
    as_belief,
    describe,
    to_mixed,
)

DEFAULT_TOL = 1e-9

#: delta may exceed min(p*, 1 - p*) by at most this much (float headroom).
_DELTA_GRACE = 1e-12

# Condition branches / verdicts.
BRANCH_STRICT = "first_order_strict"
BRANCH_SECOND_ORDER = "second_order"
VERDICT_ESS = "ess"
VERDICT_NOT_ESS = "not_ess"
VERDICT_NEUTRAL = "neutrally_stable"
CHECK_STABLE_STRICT = "stable_strict"
CHECK_STABLE_SECOND = "stable_second_order"
CHECK_NEUTRAL = "neutral"
CHECK_UNSTABLE = "unstable"


class SolverError(ValueError):
    """Base class for solver failures."""


class DegenerateGame(SolverError):
    """The indifference equation has a zero coefficient: every mixture is
    indifferent, or none is."""


class NoMixedEss(SolverError):
    """The game has no interior mixed ESS, so no belief family exists."""


class DeltaOutOfRange(SolverError):
    """Requested half-width pushes the interval outside [0, 1]."""


@dataclass(frozen=True)
class ConditionMargin:
    """One strict-inequality check: lhs > rhs with slack = lhs - rhs."""

    label: str
    lhs: float
    rhs: float
    slack: float

    def to_dict(self) -> dict:
        return {"label": self.label, "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack}


def _margin(label: str, lhs: float, rhs: float) -> ConditionMargin:
    return ConditionMargin(label, lhs, rhs, lhs - rhs)


@dataclass(frozen=True)
class PureEssDecision:
    """Outcome of testing one pure strategy for evolutionary stability."""

    strategy: PureStrategy
    label: str
    verdict: str  # VERDICT_ESS | VERDICT_NOT_ESS | VERDICT_NEUTRAL
    branch: str | None  # set when verdict is VERDICT_ESS
    margins: tuple[ConditionMargin, ...]

    @property
    def is_ess(self) -> bool:
        return self.verdict == VERDICT_ESS

    def to_dict(self) -> dict:
        return {
            "strategy": self.label,
            "verdict": self.verdict,
            "branch": self.branch,
            "margins": [m.to_dict() for m in self.margins],
        }


def check_pure_ess(
    game: SymmetricGame2, s: PureStrategy, tol: float = DEFAULT_TOL
) -> PureEssDecision:
    """Test the pure strategy s against the other pure strategy t.

    s is an ESS if it strictly beats t as the incumbent (E(s,s) > E(t,s)), or
    ties there and strictly beats t as the rare invader's host
    (E(s,t) > E(t,t)).
    """
    if tol < 0:
        raise SolverError(f"tolerance must be >= 0, got {tol}")
    i, j = s.index, 1 - s.index
    ls, lt = game.labels[i], game.labels[j]
    first = _margin(f"E({ls},{ls}) vs E({lt},{ls})", game.payoff(i, i), game.payoff(j, i))
    if first.slack > tol:
        return PureEssDecision(s, ls, VERDICT_ESS, BRANCH_STRICT, (first,))
    if abs(first.slack) <= tol:
        second = _margin(f"E({ls},{lt}) vs E({lt},{lt})", game.payoff(i, j), game.payoff(j, j))
        if second.slack > tol:
            return PureEssDecision(s, ls, VERDICT_ESS, BRANCH_SECOND_ORDER, (first, second))
        if abs(second.slack) <= tol:
            return PureEssDecision(s, ls, VERDICT_NEUTRAL, None, (first, second))
        return PureEssDecision(s, ls, VERDICT_NOT_ESS, None, (first, second))
    return PureEssDecision(s, ls, VERDICT_NOT_ESS, None, (first,))


@dataclass(frozen=True)
class MixedEssResult:
    """Interior-mixture search result, including the rejection trail."""

    strategy: MixedStrategy | None
    root: float  # formal indifference root, whether or not it is interior
    margins: tuple[ConditionMargin, ...]
    rejection: str | None

    @property
    def found(self) -> bool:
        return self.strategy is not None

    def to_dict(self) -> dict:
        return {
            "p": self.strategy.p if self.strategy else None,
            "root": self.root,
            "margins": [m.to_dict() for m in self.margins],
            "rejection": self.rejection,
        }


def find_mixed_ess(game: SymmetricGame2, tol: float = DEFAULT_TOL) -> MixedEssResult:
    """Solve the indifference equation for an interior mixed ESS.

    Both pure strategies must earn the same payoff against the mixture; the
    unique root is accepted only if it is interior (p strictly between 0 and
    1) and the mixture strictly beats each pure strategy as that strategy's
    host, E(I,t) > E(t,t).
    """
    (e00, e01), (e10, e11) = game.payoffs
    adv0 = e00 - e10  # payoff advantage of strategy 0 against opponent 0
    adv1 = e01 - e11  # and against opponent 1
    if adv0 == adv1:
        raise DegenerateGame(
            "indifference equation has a zero coefficient: "
            + ("every mixture is indifferent" if adv1 == 0.0 else "no mixture is indifferent")
        )
    p = adv1 / (adv1 - adv0)
    if not 0.0 < p < 1.0:
        return MixedEssResult(None, p, (), f"indifference root {p:.12g} outside (0, 1)")
    mixed = MixedStrategy(p)
    margins = []
    for t in (0, 1):
        lt = game.labels[t]
        e_mix_vs_t = expected_payoff(game, mixed, PureStrategy(t)).value
        margins.append(_margin(f"E(I,{lt}) vs E({lt},{lt})", e_mix_vs_t, game.payoff(t, t)))
    if all(m.slack > tol for m in margins):
        return MixedEssResult(mixed, p, tuple(margins), None)
    return MixedEssResult(
        None, p, tuple(margins), "interior root is not stable against both pure strategies"
    )


def max_delta(game: SymmetricGame2, tol: float = DEFAULT_TOL) -> float:
    """Largest interval half-width the belief family supports: min(p*, 1 - p*)."""
    result = find_mixed_ess(game, tol)
    if not result.found:
        raise NoMixedEss(f"no interior mixed ESS: {result.rejection}")
    p = result.strategy.p
    return min(p, 1.0 - p)


def find_belief_ess(
    game: SymmetricGame2, delta: float, tol: float = DEFAULT_TOL
) -> BeliefStrategy:
    """The belief-interval ESS with half-width delta around the mixed ESS.

    Commits mass p* - delta to strategy 0 and 1 - p* - delta to strategy 1,
    leaving 2 * delta on the ambiguous pair, so the selection-probability
    interval is [p* - delta, p* + delta].
    """
    result = find_mixed_ess(game, tol)
    if not result.found:
        raise NoMixedEss(f"no interior mixed ESS: {result.rejection}")
    p = result.strategy.p
    bound = min(p, 1.0 - p)
    if delta < 0 or delta > bound + _DELTA_GRACE:
        raise DeltaOutOfRange(
            f"delta must lie in [0, {bound:.12g}] for midpoint {p:.12g}, got {delta}"
        )
    j = BeliefStrategy(mass0=p - delta, mass1=1.0 - p - delta)
    gap = (
        expected_payoff(game, PureStrategy(0), j).value
        - expected_payoff(game, PureStrategy(1), j).value
    )
    if abs(gap) > tol:
        raise SolverError(f"indifference violated by {gap!r} at delta={delta}")
    return j


@dataclass(frozen=True)
class InvasionCheck:
    """Stability of a resident against one invader, with all four payoffs."""

    invader: str
    verdict: str  # CHECK_STABLE_STRICT | CHECK_STABLE_SECOND | CHECK_NEUTRAL | CHECK_UNSTABLE
    branch: str  # which comparison decided (BRANCH_STRICT or BRANCH_SECOND_ORDER)
    lhs: float
    rhs: float
    slack: float
    resident_vs_resident: float
    invader_vs_resident: float
    resident_vs_invader: float
    invader_vs_invader: float

    @property
    def stable(self) -> bool:
        return self.verdict in (CHECK_STABLE_STRICT, CHECK_STABLE_SECOND)

    def to_dict(self) -> dict:
        return {
            "invader": self.invader,
            "verdict": self.verdict,
            "branch": self.branch,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "resident_vs_resident": self.resident_vs_resident,
            "invader_vs_resident": self.invader_vs_resident,
            "resident_vs_invader": self.resident_vs_invader,
            "invader_vs_invader": self.invader_vs_invader,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Invasion checks for a resident belief strategy; stable iff all pass."""

    resident: BeliefStrategy
    checks: tuple[InvasionCheck, ...]

    @property
    def stable(self) -> bool:
        return all(c.stable for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "resident": {"mass0": self.resident.mass0, "mass1": self.resident.mass1},
            "stable": self.stable,
            "checks": [c.to_dict() for c in self.checks],
        }


def verify_ess(
    game: SymmetricGame2,
    j: BeliefStrategy,
    invaders: Sequence[Strategy] | None = None,
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """Check the resident j against each invader.

    First-order: the resident must not earn less than the invader does
    against the resident population. On a tie within tol, second-order: the
    resident must strictly beat the invader in the invader's own pocket.
    Default invaders are the two pure strategies.
    """
    if invaders is None:
        invaders = (PureStrategy(0), PureStrategy(1))
    ejj = expected_payoff(game, j, j).value
    checks = []
    for t in invaders:
        etj = expected_payoff(game, t, j).value
        ejt = expected_payoff(game, j, t).value
        ett = expected_payoff(game, t, t).value
        name = describe(t, game.labels)
        if ejj > etj + tol:
            verdict, branch, lhs, rhs = CHECK_STABLE_STRICT, BRANCH_STRICT, ejj, etj
        elif abs(ejj - etj) <= tol:
            branch, lhs, rhs = BRANCH_SECOND_ORDER, ejt, ett
            if ejt > ett + tol:
                verdict = CHECK_STABLE_SECOND
            elif abs(ejt - ett) <= tol:
                verdict = CHECK_NEUTRAL
            else:
                verdict = CHECK_UNSTABLE
        else:
            verdict, branch, lhs, rhs = CHECK_UNSTABLE, BRANCH_STRICT, ejj, etj
        checks.append(
            InvasionCheck(name, verdict, branch, lhs, rhs, lhs - rhs, ejj, etj, ejt, ett)
        )
    return VerificationReport(j, tuple(checks))


def invader_sweep(
    game: SymmetricGame2,
    j: BeliefStrategy,
    count: int = 99,
    tol: float = DEFAULT_TOL,
) -> tuple[InvasionCheck, ...]:
    """Evidence sweep over evenly spaced mixed invaders p = 1/(count+1) ... .

    Supplementary only: results never feed back into the primary verdict,
    which rests on the pure-strategy invaders.
    """
    invaders = [MixedStrategy((k + 1) / (count + 1)) for k in range(count)]
    return verify_ess(game, j, invaders, tol).checks


@dataclass(frozen=True)
class BeliefFamilyResult:
    """The delta-family member actually built, plus its verification."""

    strategy: BeliefStrategy
    midpoint: float
    delta: float
    delta_max: float
    verification: VerificationReport

    def to_dict(self) -> dict:
        return {
            "mass0": self.strategy.mass0,
            "mass1": self.strategy.mass1,
            "ambiguous_mass": self.strategy.ambiguous_mass,
            "interval": [self.strategy.lower, self.strategy.upper],
            "midpoint": self.midpoint,
            "delta": self.delta,
            "delta_max": self.delta_max,
            "verified_stable": self.verification.stable,
            "checks": [c.to_dict() for c in self.verification.checks],
        }


@dataclass(frozen=True)
class EssReport:
    """Full classification of a game at one tolerance and one delta."""

    game: SymmetricGame2
    tolerance: float
    delta: float
    pure: tuple[PureEssDecision, PureEssDecision]
    mixed: MixedEssResult
    belief: BeliefFamilyResult | None
    belief_skipped: str | None = None
    degenerate: bool = False

    @property
    def any_ess(self) -> bool:
        return (
            any(d.is_ess for d in self.pure)
            or self.mixed.found
            or (self.belief is not None and self.belief.verification.stable)
        )

    def to_dict(self) -> dict:
        return {
            "game": {"labels": list(self.game.labels), "payoffs": [list(r) for r in self.game.payoffs]},
            "tolerance": self.tolerance,
            "delta": self.delta,
            "pure": [d.to_dict() for d in self.pure],
            "mixed": self.mixed.to_dict(),
            "belief": self.belief.to_dict() if self.belief else None,
            "belief_skipped": self.belief_skipped,
            "degenerate": self.degenerate,
            "any_ess": self.any_ess,
        }


def classify(game: SymmetricGame2, delta: float = 0.0, tol: float = DEFAULT_TOL) -> EssReport:
    """Run the full pure / mixed / belief classification.

    A degenerate indifference equation is recorded in the report rather than
    raised, so pure-strategy results survive for games where one strategy's
    advantage is constant; call find_mixed_ess directly for the raising form.
    """
    pure = (check_pure_ess(game, PureStrategy(0), tol), check_pure_ess(game, PureStrategy(1), tol))
    degenerate = False
    try:
        mixed = find_mixed_ess(game, tol)
    except DegenerateGame as exc:
        degenerate = True
        mixed = MixedEssResult(None, float("nan"), (), str(exc))
    belief = None
    skipped = None
    if mixed.found:
        p = mixed.strategy.p
        bound = min(p, 1.0 - p)
        if delta <= bound + _DELTA_GRACE:
            j = find_belief_ess(game, delta, tol)
            belief = BeliefFamilyResult(j, p, delta, bound, verify_ess(game, j, tol=tol))
        else:
            skipped = f"delta {delta:.12g} exceeds max delta {bound:.12g}"
    else:
        skipped = f"no mixed ESS ({mixed.rejection})"
    return EssReport(game, tol, delta, pure, mixed, belief, skipped, degenerate)
