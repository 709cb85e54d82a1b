"""The pure / mixed / belief strategy hierarchy and conversions between levels.

A belief strategy commits probability mass to each pure strategy and leaves
the indistinguishable remainder on the ambiguous pair. The committed masses
bound the realized selection probability of strategy 0 by the interval
[lower, upper] = [mass0, 1 - mass1]; a mixed strategy is the degenerate case
where the interval collapses to a point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .evidence import NORMALIZATION_TOL, FrameOfDiscernment, MassFunction, make_mass_function


class StrategyError(ValueError):
    """Invalid strategy parameters or unusable conversion target."""


class WrongFrameSize(StrategyError):
    """Belief strategies convert to mass functions only on two-element frames."""


class SpecParseError(StrategyError):
    """Malformed strategy specification string."""


@dataclass(frozen=True)
class PureStrategy:
    """One of the two pure strategies, by index into the game's label pair."""

    index: int

    def __post_init__(self) -> None:
        if self.index not in (0, 1):
            raise StrategyError(f"pure strategy index must be 0 or 1, got {self.index}")


@dataclass(frozen=True)
class MixedStrategy:
    """Play strategy 0 with probability p and strategy 1 otherwise."""

    p: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise StrategyError(f"mixing probability must lie in [0, 1], got {self.p}")


@dataclass(frozen=True)
class BeliefStrategy:
    """Mass committed to each pure strategy; the rest sits on the ambiguous pair.

    mass0 and mass1 are the weights pinned to strategies 0 and 1; the
    remainder 1 - mass0 - mass1 is probability the player cannot attribute to
    either. The realized probability of playing strategy 0 is only known to
    lie in [lower, upper].
    """

    mass0: float
    mass1: float

    def __post_init__(self) -> None:
        if self.mass0 < -NORMALIZATION_TOL or self.mass1 < -NORMALIZATION_TOL:
            raise StrategyError(f"masses must be non-negative, got ({self.mass0}, {self.mass1})")
        if self.mass0 + self.mass1 > 1.0 + NORMALIZATION_TOL:
            raise StrategyError(
                f"masses must sum to at most 1, got {self.mass0} + {self.mass1}"
            )

    @property
    def lower(self) -> float:
        """Lower bound on the probability of playing strategy 0."""
        return self.mass0

    @property
    def upper(self) -> float:
        """Upper bound on the probability of playing strategy 0."""
        return 1.0 - self.mass1

    @property
    def midpoint(self) -> float:
        return (self.lower + self.upper) / 2.0

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def ambiguous_mass(self) -> float:
        """Mass on the unresolved pair of strategies."""
        return 1.0 - self.mass0 - self.mass1

    @property
    def is_degenerate(self) -> bool:
        """True when the interval has (numerically) zero width."""
        return self.width <= NORMALIZATION_TOL


Strategy = Union[PureStrategy, MixedStrategy, BeliefStrategy]


def belief_interval(j: BeliefStrategy) -> tuple[float, float]:
    """The (lower, upper) probability interval for strategy 0."""
    return (j.lower, j.upper)


def from_pure(s: PureStrategy) -> BeliefStrategy:
    """Embed a pure strategy as a point-mass belief strategy."""
    return BeliefStrategy(mass0=1.0, mass1=0.0) if s.index == 0 else BeliefStrategy(0.0, 1.0)


def from_mixed(i: MixedStrategy) -> BeliefStrategy:
    """Embed a mixed strategy as a belief strategy with a degenerate interval."""
    return BeliefStrategy(mass0=i.p, mass1=1.0 - i.p)


def to_mixed(j: BeliefStrategy) -> MixedStrategy | None:
    """Collapse a degenerate belief strategy to its mixed form.

    Returns None when the interval has positive width: such a strategy
    carries genuine ambiguity and has no mixed equivalent.
    """
    if not j.is_degenerate:
        return None
    return MixedStrategy(p=j.mass0)


def as_belief(s: Strategy) -> BeliefStrategy:
    """Canonical belief-strategy form of any strategy level."""
    if isinstance(s, BeliefStrategy):
        return s
    if isinstance(s, MixedStrategy):
        return from_mixed(s)
    if isinstance(s, PureStrategy):
        return from_pure(s)
    raise StrategyError(f"not a strategy: {s!r}")


def as_mass_function(j: BeliefStrategy, frame: FrameOfDiscernment) -> MassFunction:
    """The mass function a belief strategy induces on a two-element frame.

    Zero-mass subsets are omitted.
    """
    if frame.size != 2:
        raise WrongFrameSize(f"belief strategies need a 2-element frame, got size {frame.size}")
    remainder = max(j.ambiguous_mass, 0.0)
    assignments = [
        ((frame.elements[0],), j.mass0),
        ((frame.elements[1],), j.mass1),
        (frame.elements, remainder),
    ]
    return make_mass_function(frame, [(s, w) for s, w in assignments if w > 0.0])


def describe(s: Strategy, labels: tuple[str, str] = ("0", "1")) -> str:
    """Short human-readable form, used in reports and trajectory headers."""
    if isinstance(s, PureStrategy):
        return f"pure {labels[s.index]}"
    if isinstance(s, MixedStrategy):
        return f"mixed p({labels[0]})={s.p:.12g}"
    if isinstance(s, BeliefStrategy):
        return f"belief [{s.lower:.12g}, {s.upper:.12g}]"
    raise StrategyError(f"not a strategy: {s!r}")


def parse_strategy_spec(spec: str, labels: tuple[str, str]) -> Strategy:
    """Parse a strategy specification string.

    Grammar: ``pure=<label>`` | ``mixed=<p>`` | ``belief=<mass0>,<mass1>``.
    The same forms appear as values in game/strategy definition files.
    """
    kind, sep, value = spec.partition("=")
    if not sep:
        raise SpecParseError(f"strategy spec needs the form kind=value, got {spec!r}")
    kind = kind.strip()
    value = value.strip()
    if kind == "pure":
        if value not in labels:
            raise SpecParseError(f"unknown strategy label {value!r}; expected one of {labels}")
        return PureStrategy(labels.index(value))
    if kind == "mixed":
        try:
            return MixedStrategy(float(value))
        except ValueError as exc:
            raise SpecParseError(f"bad mixed spec {spec!r}: {exc}") from None
    if kind == "belief":
        parts = value.split(",")
        if len(parts) != 2:
            raise SpecParseError(f"belief spec needs two comma-separated masses, got {spec!r}")
        try:
            return BeliefStrategy(float(parts[0]), float(parts[1]))
        except ValueError as exc:
            raise SpecParseError(f"bad belief spec {spec!r}: {exc}") from None
    raise SpecParseError(f"unknown strategy kind {kind!r}; expected pure, mixed, or belief")
