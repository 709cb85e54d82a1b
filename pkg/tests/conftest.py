"""Shared helpers and hypothesis strategies for the test suite."""

import hypothesis.strategies as st

from belief_ess import BeliefStrategy, HawkDoveParams, SymmetricGame2, hawk_dove


def hd(v: float, c: float) -> SymmetricGame2:
    return hawk_dove(HawkDoveParams(v, c))


payoff_entries = st.floats(min_value=-5.0, max_value=5.0)

games = st.builds(
    lambda e00, e01, e10, e11: SymmetricGame2(("A", "B"), ((e00, e01), (e10, e11))),
    payoff_entries,
    payoff_entries,
    payoff_entries,
    payoff_entries,
)

probabilities = st.floats(min_value=0.0, max_value=1.0)


@st.composite
def belief_pairs(draw) -> BeliefStrategy:
    a = draw(probabilities)
    b = draw(probabilities)
    if a + b > 1.0:
        # reflect into the mass simplex
        a, b = 1.0 - a, 1.0 - b
    return BeliefStrategy(a, b)
