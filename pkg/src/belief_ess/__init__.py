"""Evolutionarily stable strategies for symmetric 2x2 games, including
belief-interval strategies built on Dempster-Shafer mass functions.

The package answers three questions about a game:

* does it have a pure, mixed, or belief-interval ESS (``solver``)?
* what does any strategy earn against any other, in closed form and by
  seeded Monte Carlo (``payoffs``)?
* does an invader actually die out under replicator dynamics (``dynamics``)?

A belief-interval strategy commits probability mass to each action and
leaves the rest ambiguous; the committed masses bound the action
probability by an interval, and the player draws its mixing weight
uniformly from that interval each encounter. Around any interior mixed
ESS there is a one-parameter family of such strategies, indexed by the
interval half-width, that stays exactly indifferent between the actions.
"""

from .dynamics import (
    DynamicsError,
    EmptyRoster,
    PopulationState,
    Trajectory,
    invasion_experiment,
    payoff_matrix,
    replicator_step,
)
from .evidence import (
    EmptySetAssigned,
    EvidenceError,
    FrameOfDiscernment,
    MassFunction,
    NegativeWeight,
    NotNormalized,
    UnknownElement,
    belief,
    make_mass_function,
    plausibility,
)
from .games import (
    GameError,
    GameFileError,
    HawkDoveParams,
    IndexOutOfRange,
    NonPositiveParameter,
    SymmetricGame2,
    UnknownLabel,
    hawk_dove,
    load_game,
)
from .payoffs import (
    PayoffResult,
    ZeroSamples,
    expected_belief_vs_belief,
    expected_belief_vs_pure,
    expected_mixed_vs_mixed,
    expected_payoff,
    expected_pure_vs_belief,
    mc_expected_payoff,
)
from .solver import (
    BeliefFamilyResult,
    ConditionMargin,
    DegenerateGame,
    DeltaOutOfRange,
    EssReport,
    InvasionCheck,
    MixedEssResult,
    NoMixedEss,
    PureEssDecision,
    SolverError,
    VerificationReport,
    check_pure_ess,
    classify,
    find_belief_ess,
    find_mixed_ess,
    invader_sweep,
    max_delta,
    verify_ess,
)
from .strategies import (
    BeliefStrategy,
    MixedStrategy,
    PureStrategy,
    SpecParseError,
    Strategy,
    StrategyError,
    WrongFrameSize,
    as_belief,
    as_mass_function,
    belief_interval,
    describe,
    from_mixed,
    from_pure,
    parse_strategy_spec,
    to_mixed,
)

__version__ = "0.1.0"

__all__ = [
    "BeliefFamilyResult",
    "BeliefStrategy",
    "ConditionMargin",
    "DegenerateGame",
    "DeltaOutOfRange",
    "DynamicsError",
    "EmptyRoster",
    "EmptySetAssigned",
    "EssReport",
    "EvidenceError",
    "FrameOfDiscernment",
    "GameError",
    "GameFileError",
    "HawkDoveParams",
    "IndexOutOfRange",
    "InvasionCheck",
    "MassFunction",
    "MixedEssResult",
    "MixedStrategy",
    "NegativeWeight",
    "NoMixedEss",
    "NonPositiveParameter",
    "NotNormalized",
    "PayoffResult",
    "PopulationState",
    "PureEssDecision",
    "PureStrategy",
    "SolverError",
    "SpecParseError",
    "Strategy",
    "StrategyError",
    "SymmetricGame2",
    "Trajectory",
    "UnknownElement",
    "UnknownLabel",
    "VerificationReport",
    "WrongFrameSize",
    "ZeroSamples",
    "as_belief",
    "as_mass_function",
    "belief",
    "belief_interval",
    "check_pure_ess",
    "classify",
    "describe",
    "expected_belief_vs_belief",
    "expected_belief_vs_pure",
    "expected_mixed_vs_mixed",
    "expected_payoff",
    "expected_pure_vs_belief",
    "find_belief_ess",
    "find_mixed_ess",
    "from_mixed",
    "from_pure",
    "hawk_dove",
    "invader_sweep",
    "invasion_experiment",
    "load_game",
    "make_mass_function",
    "max_delta",
    "mc_expected_payoff",
    "parse_strategy_spec",
    "payoff_matrix",
    "plausibility",
    "replicator_step",
    "to_mixed",
    "verify_ess",
]
