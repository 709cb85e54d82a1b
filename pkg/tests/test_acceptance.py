"""Acceptance gate: the eight headline behaviors, each at its stated tolerance.

Each test prints one ``ACCEPTANCE n: PASS`` line after its assertions (visible
with ``pytest -s``); a pytest failure for a test is the corresponding FAIL
line. Randomized criteria use fixed seeds, so every run checks the same
instances.
"""

import time

import numpy as np
import pytest

from belief_ess import (
    DegenerateGame,
    FrameOfDiscernment,
    PureStrategy,
    belief,
    classify,
    expected_payoff,
    find_belief_ess,
    find_mixed_ess,
    hawk_dove,
    HawkDoveParams,
    invasion_experiment,
    make_mass_function,
    mc_expected_payoff,
    plausibility,
    to_mixed,
    verify_ess,
    BeliefStrategy,
    SymmetricGame2,
)
from belief_ess.solver import BRANCH_SECOND_ORDER, BRANCH_STRICT


def hd(v, c):
    return hawk_dove(HawkDoveParams(v, c))


def test_criterion_1_mixed_ess_probability():
    # named ratios first, then assorted pairs to make twenty
    pairs = [
        (1.0, 10.0), (1.0, 4.0), (2.0, 4.0), (3.0, 4.0), (9.0, 10.0),
        (0.5, 5.0), (2.0, 20.0), (1.5, 2.0), (3.0, 10.0), (7.0, 8.0),
        (2.5, 3.5), (4.0, 5.0), (1.0, 3.0), (2.0, 7.0), (5.0, 6.0),
        (0.7, 0.9), (0.2, 1.1), (3.3, 4.4), (6.0, 6.5), (0.01, 0.02),
    ]
    assert len(pairs) == 20
    named = {round(v / c, 2) for v, c in pairs[:5]}
    assert {0.1, 0.25, 0.5, 0.75, 0.9} <= named
    for v, c in pairs:
        result = find_mixed_ess(hd(v, c))
        assert result.found, (v, c)
        assert abs(result.strategy.p - v / c) <= 1e-12, (v, c)
    print("ACCEPTANCE 1: PASS (mixed ESS p = V/C within 1e-12 at 20 pairs)")


def test_criterion_2_belief_family_masses_and_indifference():
    g = hd(2, 4)
    for delta in (0.0, 0.1, 0.2, 0.3, 0.4, 0.5):
        j = find_belief_ess(g, delta)
        assert abs(j.mass0 - (0.5 - delta)) <= 1e-12
        assert abs(j.mass1 - (0.5 - delta)) <= 1e-12
        assert abs(j.ambiguous_mass - 2 * delta) <= 1e-12
        gap = (
            expected_payoff(g, PureStrategy(0), j).value
            - expected_payoff(g, PureStrategy(1), j).value
        )
        assert abs(gap) <= 1e-10
    print("ACCEPTANCE 2: PASS (family masses within 1e-12, indifference within 1e-10)")


def test_criterion_3_stability_margins():
    g = hd(2, 4)
    v, c = 2.0, 4.0
    report = verify_ess(g, find_belief_ess(g, 0.2))
    checks = {ch.invader: ch for ch in report.checks}
    vs_hawk = checks["pure H"]
    assert abs(vs_hawk.resident_vs_invader - (v - c) / 2 * (v / c)) <= 1e-12  # -0.5
    assert abs(vs_hawk.invader_vs_invader - (v - c) / 2) <= 1e-12  # -1
    assert vs_hawk.resident_vs_invader > vs_hawk.invader_vs_invader
    vs_dove = checks["pure D"]
    assert abs(vs_dove.resident_vs_invader - (v / 2 * (v / c) + v / 2)) <= 1e-12  # 1.5
    assert abs(vs_dove.invader_vs_invader - v / 2) <= 1e-12  # 1
    assert vs_dove.resident_vs_invader > vs_dove.invader_vs_invader
    assert report.stable
    print("ACCEPTANCE 3: PASS (-0.5 > -1 and 1.5 > 1 margins within 1e-12)")


def test_criterion_4_zero_width_family_reduces_to_mixed():
    rng = np.random.default_rng(20260823)
    for _ in range(50):
        v = float(rng.uniform(0.2, 5.0))
        c = v + float(rng.uniform(0.1, 5.0))
        report = classify(hd(v, c), delta=0.0)
        assert report.mixed.found
        assert report.belief is not None
        reduced = to_mixed(report.belief.strategy)
        assert reduced is not None
        assert reduced.p == report.mixed.strategy.p
    print("ACCEPTANCE 4: PASS (50 games: zero-width belief ESS equals mixed ESS exactly)")


def test_criterion_5_monte_carlo_agrees_with_closed_forms():
    start = time.perf_counter()
    rng = np.random.default_rng(555)
    hits = 0
    for _ in range(100):
        payoffs = tuple(tuple(float(x) for x in row) for row in rng.uniform(-5, 5, (2, 2)))
        g = SymmetricGame2(("A", "B"), payoffs)
        a0 = float(rng.uniform(0, 1))
        row = BeliefStrategy(a0, float(rng.uniform(0, 1 - a0)))
        b0 = float(rng.uniform(0, 1))
        col = BeliefStrategy(b0, float(rng.uniform(0, 1 - b0)))
        exact = expected_payoff(g, row, col).value
        estimate = mc_expected_payoff(g, row, col, 10**6, int(rng.integers(2**32)))
        if estimate.stderr == 0.0:
            hits += abs(estimate.value - exact) <= 1e-12
        else:
            hits += abs(estimate.value - exact) <= 4 * estimate.stderr
    elapsed = time.perf_counter() - start
    assert hits >= 99
    assert elapsed < 60.0
    print(f"ACCEPTANCE 5: PASS ({hits}/100 within 4 stderr, {elapsed:.1f}s)")


def test_criterion_6_evidence_measure_properties():
    rng = np.random.default_rng(777)
    alphabet = ("w", "x", "y", "z")
    for _ in range(1000):
        size = int(rng.integers(2, 5))
        frame = FrameOfDiscernment(alphabet[:size])
        n_subsets = int(rng.integers(1, frame.full_mask + 1))
        chosen = rng.choice(frame.full_mask, size=n_subsets, replace=False) + 1
        weights = rng.random(n_subsets) + 1e-3
        total = float(weights.sum())
        m = make_mass_function(
            frame, [(int(s), float(w) / total) for s, w in zip(chosen, weights)]
        )
        subsets = range(frame.full_mask + 1)
        for a in subsets:
            bel_a = belief(m, a)
            pl_a = plausibility(m, a)
            assert abs(pl_a - (1.0 - belief(m, frame.complement(a)))) <= 1e-12
            assert bel_a <= pl_a + 1e-12
            for b in subsets:
                if a & b == a:
                    assert bel_a <= belief(m, b) + 1e-12
    print("ACCEPTANCE 6: PASS (1000 mass functions: duality, Bel<=Pl, monotone within 1e-12)")


def test_criterion_7_dynamics_agree_with_static_verdicts():
    start = time.perf_counter()
    g = hd(2, 4)
    resident = find_belief_ess(g, 0.2)
    for mutant in (PureStrategy(0), PureStrategy(1)):
        run = invasion_experiment(g, resident, mutant, epsilon=0.01, max_steps=100_000)
        assert run.verdict == "invader_extinct"
        assert run.n_steps <= 100_000
    dove_hawk = invasion_experiment(
        g, PureStrategy(1), PureStrategy(0), epsilon=0.01, max_steps=100_000
    )
    assert dove_hawk.verdict != "invader_extinct"
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    print(f"ACCEPTANCE 7: PASS (belief resident repels pure mutants, doves fall, {elapsed:.2f}s)")


def test_criterion_8_pure_branch_coverage():
    strict = classify(hd(4, 2)).pure[0]
    assert strict.is_ess
    assert strict.branch == BRANCH_STRICT

    tied = classify(hd(2, 2)).pure[0]  # V = C ties the first-order payoffs
    assert tied.is_ess
    assert tied.branch == BRANCH_SECOND_ORDER

    flat = SymmetricGame2(("A", "B"), ((1.0, 1.0), (1.0, 1.0)))
    with pytest.raises(DegenerateGame):
        find_mixed_ess(flat)
    print("ACCEPTANCE 8: PASS (strict branch, second-order branch, degenerate game)")
