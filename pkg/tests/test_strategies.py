"""Strategy hierarchy: intervals, conversions, and the specification-string parser."""

import pytest
from hypothesis import given

from belief_ess import (
    BeliefStrategy,
    FrameOfDiscernment,
    MixedStrategy,
    PureStrategy,
    SpecParseError,
    StrategyError,
    WrongFrameSize,
    as_belief,
    as_mass_function,
    belief,
    belief_interval,
    describe,
    from_mixed,
    from_pure,
    parse_strategy_spec,
    plausibility,
    to_mixed,
)
from conftest import belief_pairs, probabilities

TOL = 1e-12
HD = FrameOfDiscernment(("H", "D"))


class TestValidation:
    def test_pure_index(self):
        with pytest.raises(StrategyError):
            PureStrategy(2)

    def test_mixed_probability(self):
        with pytest.raises(StrategyError):
            MixedStrategy(1.5)
        with pytest.raises(StrategyError):
            MixedStrategy(-0.1)

    def test_belief_masses(self):
        with pytest.raises(StrategyError):
            BeliefStrategy(-0.1, 0.5)
        with pytest.raises(StrategyError):
            BeliefStrategy(0.6, 0.6)
        # a hair of negative slack from float cancellation is tolerated
        BeliefStrategy(-1e-13, 0.5)


class TestInterval:
    def test_examples(self):
        assert belief_interval(BeliefStrategy(0.3, 0.2)) == (0.3, 0.8)
        assert belief_interval(BeliefStrategy(0.5, 0.5)) == (0.5, 0.5)
        assert belief_interval(BeliefStrategy(0.0, 0.0)) == (0.0, 1.0)

    def test_derived_quantities(self):
        j = BeliefStrategy(0.3, 0.2)
        assert j.midpoint == pytest.approx(0.55, abs=TOL)
        assert j.width == pytest.approx(0.5, abs=TOL)
        assert j.ambiguous_mass == pytest.approx(0.5, abs=TOL)
        assert not j.is_degenerate
        assert BeliefStrategy(0.5, 0.5).is_degenerate

    @given(belief_pairs())
    def test_duality_with_other_strategy(self, j):
        # the interval for strategy 1 is (mass1, 1 - mass0)
        bel_other, pl_other = j.mass1, 1.0 - j.mass0
        assert abs(bel_other - (1.0 - j.upper)) <= TOL
        assert abs(pl_other - (1.0 - j.lower)) <= TOL


class TestConversions:
    def test_from_mixed_examples(self):
        assert from_mixed(MixedStrategy(0.5)) == BeliefStrategy(0.5, 0.5)
        assert from_mixed(MixedStrategy(1.0)) == BeliefStrategy(1.0, 0.0)
        assert from_mixed(MixedStrategy(0.0)) == BeliefStrategy(0.0, 1.0)

    def test_to_mixed_examples(self):
        assert to_mixed(BeliefStrategy(0.5, 0.5)) == MixedStrategy(0.5)
        assert to_mixed(BeliefStrategy(0.3, 0.2)) is None
        assert to_mixed(BeliefStrategy(1.0, 0.0)) == MixedStrategy(1.0)

    @given(probabilities)
    def test_round_trip_exact(self, p):
        back = to_mixed(from_mixed(MixedStrategy(p)))
        assert back is not None
        assert back.p == p

    def test_from_pure(self):
        assert from_pure(PureStrategy(0)) == BeliefStrategy(1.0, 0.0)
        assert from_pure(PureStrategy(1)) == BeliefStrategy(0.0, 1.0)

    def test_as_belief_levels(self):
        assert as_belief(PureStrategy(0)) == BeliefStrategy(1.0, 0.0)
        assert as_belief(MixedStrategy(0.25)) == BeliefStrategy(0.25, 0.75)
        j = BeliefStrategy(0.2, 0.3)
        assert as_belief(j) is j


class TestMassFunctionBridge:
    def test_examples(self):
        m = as_mass_function(BeliefStrategy(0.3, 0.2), HD)
        by = m.by_labels()
        assert by[("H",)] == pytest.approx(0.3, abs=TOL)
        assert by[("D",)] == pytest.approx(0.2, abs=TOL)
        assert by[("H", "D")] == pytest.approx(0.5, abs=TOL)

    def test_point_mass(self):
        assert as_mass_function(BeliefStrategy(1.0, 0.0), HD).by_labels() == {("H",): 1.0}

    def test_vacuous(self):
        assert as_mass_function(BeliefStrategy(0.0, 0.0), HD).by_labels() == {("H", "D"): 1.0}

    def test_wrong_frame_size(self):
        with pytest.raises(WrongFrameSize):
            as_mass_function(BeliefStrategy(0.3, 0.2), FrameOfDiscernment(("a", "b", "c")))

    @given(belief_pairs())
    def test_interval_matches_evidence_measures(self, j):
        m = as_mass_function(j, HD)
        assert abs(belief(m, "H") - j.lower) <= TOL
        assert abs(plausibility(m, "H") - j.upper) <= TOL


class TestSpecParsing:
    def test_pure(self):
        assert parse_strategy_spec("pure=H", ("H", "D")) == PureStrategy(0)
        assert parse_strategy_spec("pure=D", ("H", "D")) == PureStrategy(1)

    def test_mixed(self):
        assert parse_strategy_spec("mixed=0.25", ("H", "D")) == MixedStrategy(0.25)

    def test_belief(self):
        assert parse_strategy_spec("belief=0.3,0.2", ("H", "D")) == BeliefStrategy(0.3, 0.2)

    def test_whitespace_tolerated(self):
        assert parse_strategy_spec(" pure = H ", ("H", "D")) == PureStrategy(0)

    @pytest.mark.parametrize(
        "spec",
        [
            "pure=X",
            "mixed=abc",
            "mixed=1.5",
            "belief=0.3",
            "belief=0.1,0.2,0.3",
            "belief=0.9,0.9",
            "nonsense",
            "unknown=1",
        ],
    )
    def test_rejects(self, spec):
        with pytest.raises(SpecParseError):
            parse_strategy_spec(spec, ("H", "D"))


def test_describe():
    labels = ("H", "D")
    assert describe(PureStrategy(1), labels) == "pure D"
    assert describe(MixedStrategy(0.5), labels) == "mixed p(H)=0.5"
    assert describe(BeliefStrategy(0.3, 0.3), labels) == "belief [0.3, 0.7]"
