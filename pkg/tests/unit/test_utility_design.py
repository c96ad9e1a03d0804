"""Unit tests for the cooperation-level design."""

import pytest

from levelk_market.core.utility_design import (
    equal_level_profile,
    equal_level_total,
    equal_level_welfare,
    has_multiple_optima,
    optimal_cooperation_level,
    optimal_total_even,
    por_with_design,
)
from levelk_market.exceptions import InvalidInputError
from levelk_market.models import GridSpec
from levelk_market.oracles import gamma_sweep

SPAN = 0.75


@pytest.mark.unit
class TestEqualLevelPlay:
    """Test both firms at the same level under the designed utility"""

    def test_reference_point(self, market):
        """Happy path: k = 2, gamma = 0.6, f = 0.25 gives (0.3, 0.25)"""
        profile = equal_level_profile(2, 0.6, market(0.25))
        assert profile.q_s == pytest.approx(0.3, abs=1e-12)
        assert profile.q_b == pytest.approx(0.25, abs=1e-12)
        assert equal_level_welfare(2, 0.6, market(0.25)) == pytest.approx(0.26125, abs=1e-12)

    def test_fighting_planner(self, market):
        """Edge case: gamma < -1 at k = 5 gives the equilibrium self quantity and f"""
        m = market(0.1)
        assert equal_level_total(5, -1.7, m) == pytest.approx(0.425, abs=1e-12)


@pytest.mark.unit
class TestOptimalCooperationLevel:
    """Test the closed-form gamma*"""

    def test_even_level(self, market):
        """Happy path: k = 2, f = 0.25 gives 2 * 0.8 - 1"""
        gamma = optimal_cooperation_level(2, market(0.25))
        assert gamma.gamma == pytest.approx(0.6, abs=1e-12)

    def test_even_total(self, market):
        """Happy path: gamma* reaches (B^2 + fB - f^2)/(2B - f) = 0.55"""
        m = market(0.25)
        assert optimal_total_even(m) == pytest.approx(0.55, abs=1e-12)
        for k in (2, 4, 6, 10):
            gamma = optimal_cooperation_level(k, m)
            assert equal_level_total(k, gamma, m) == pytest.approx(0.55, abs=1e-12)

    def test_full_capacity_is_fighting(self, market):
        """Edge case: f = (b-c)/a gives gamma* = -1 and the equilibrium"""
        m = market(SPAN)
        assert optimal_cooperation_level(2, m).gamma == -1.0
        assert por_with_design(2, m) == 1.0

    def test_always_in_unit_interval(self, beta_markets):
        """Property: gamma* lies in [-1, 1]"""
        for m in beta_markets:
            for k in range(1, 21):
                assert -1.0 <= optimal_cooperation_level(k, m).gamma <= 1.0

    def test_design_never_hurts(self, beta_markets):
        """Property: gamma* does at least as well as gamma = 0 and as the equilibrium"""
        for m in beta_markets:
            for k in range(1, 21):
                designed = equal_level_welfare(k, optimal_cooperation_level(k, m), m)
                assert designed >= equal_level_welfare(k, 0.0, m) - 1e-12
                assert por_with_design(k, m) <= 1.0 + 1e-12

    def test_level_zero_rejected(self, params):
        """Bad input: k = 0"""
        with pytest.raises(InvalidInputError):
            optimal_cooperation_level(0, params)

    def test_design_constant_for_even_levels(self, beta_markets):
        """Property: designed PoR is the same for every even k"""
        for m in beta_markets:
            values = [por_with_design(k, m) for k in range(2, 13, 2)]
            assert max(values) - min(values) <= 1e-9

    def test_design_welfare_decreasing_for_odd_levels(self, beta_markets):
        """Property: designed welfare does not increase with odd k"""
        for m in beta_markets:
            values = [
                equal_level_welfare(k, optimal_cooperation_level(k, m), m) for k in range(1, 13, 2)
            ]
            assert all(b <= a + 1e-9 for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("k", range(1, 13))
    def test_matches_gamma_sweep(self, beta_markets, k):
        """Property: no swept gamma in [-3, 3] beats gamma* by more than rounding"""
        grid = GridSpec(lo=-3.0, hi=3.0, n=6001)
        for m in beta_markets:
            closed = equal_level_welfare(k, optimal_cooperation_level(k, m), m)
            _, swept = gamma_sweep(k, grid, m)
            assert closed >= swept - 1e-9
            assert closed - swept <= 1e-3


@pytest.mark.unit
class TestMultipleOptima:
    """Test the odd-level condition for optimal gamma <= -1"""

    def test_level_one_small_capacity(self, market):
        """Happy path: beta = 1/3 is below 2/3"""
        assert has_multiple_optima(1, market(0.25)) is True

    def test_level_one_large_capacity(self, market):
        """Happy path: beta = 0.7/0.75 is above 2/3"""
        assert has_multiple_optima(1, market(0.7)) is False

    def test_higher_odd_level(self, market):
        """Happy path: k = 5, f = 0.1 has gamma* and gamma = -1.7 tied"""
        m = market(0.1)
        assert has_multiple_optima(5, m) is True
        gamma = optimal_cooperation_level(5, m)
        assert equal_level_total(5, gamma, m) == pytest.approx(0.425, abs=1e-9)
        assert equal_level_welfare(5, -1.7, m) == pytest.approx(
            equal_level_welfare(5, gamma, m), abs=1e-9
        )

    def test_fighting_optimal_when_condition_holds(self, beta_markets):
        """Property: when the condition holds, gamma = -2 is as good as gamma*"""
        for m in beta_markets:
            for k in (1, 3, 5, 7):
                if not has_multiple_optima(k, m):
                    continue
                best = equal_level_welfare(k, optimal_cooperation_level(k, m), m)
                assert equal_level_welfare(k, -2.0, m) >= best - 1e-9

    def test_tied_sweep_keeps_value(self, params):
        """Regression test: at k = 1, f = 0.5 every gamma <= -1/3 is optimal"""
        _, value = gamma_sweep(1, GridSpec(lo=-3.0, hi=3.0, n=601), params)
        assert value == pytest.approx(0.28125, abs=1e-12)

    def test_even_level_rejected(self, params):
        """Bad input: even k"""
        with pytest.raises(InvalidInputError):
            has_multiple_optima(2, params)
