"""Unit tests for demand, payoffs and welfare."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levelk_market.core.market_model import (
    consumer_surplus,
    designed_utility,
    inverse_demand,
    profit_self,
    welfare,
    welfare_at_total,
    welfare_distance,
    welfare_from_distance,
)
from levelk_market.exceptions import InvalidInputError
from levelk_market.models import CooperationLevel, MarketParams, StrategyProfile


@pytest.mark.unit
class TestInverseDemand:
    """Test p(q) = b - a*q"""

    def test_intercept(self, params):
        """Happy path: zero demand prices at the intercept"""
        assert inverse_demand(0.0, params) == 1.0

    def test_zero_price_point(self, params):
        """Edge case: q = b/a gives a zero price"""
        assert inverse_demand(params.b / params.a, params) == 0.0

    def test_interior(self, params):
        """Happy path: q = 0.625 gives 0.375"""
        assert inverse_demand(0.625, params) == pytest.approx(0.375, abs=1e-12)


@pytest.mark.unit
class TestWelfare:
    """Test social welfare and its distance form"""

    def test_empty_market(self, params):
        """Edge case: nothing produced, no welfare"""
        assert welfare(StrategyProfile(q_s=0.0, q_b=0.0), params) == 0.0

    def test_equilibrium_profile(self, params):
        """Happy path: (0.125, 0.5) is the equilibrium at f = 0.5"""
        assert welfare(StrategyProfile(q_s=0.125, q_b=0.5), params) == 0.2734375

    def test_efficient_total_reaches_maximum(self, params):
        """Happy path: total (b-c)/a reaches (b-c)^2/(2a) + m"""
        profile = StrategyProfile(q_s=0.25, q_b=0.5)
        assert welfare(profile, params) == pytest.approx(params.optimal_welfare, abs=1e-12)
        assert welfare_distance(profile, params) == 0.0

    def test_distance_underproduction(self, params):
        """Happy path: |0.75 - 0.625| = 0.125"""
        assert welfare_distance(StrategyProfile(q_s=0.125, q_b=0.5), params) == 0.125

    def test_distance_overproduction(self, params):
        """Happy path: |0.75 - 1.0| = 0.25"""
        assert welfare_distance(StrategyProfile(q_s=0.5, q_b=0.5), params) == 0.25

    def test_decomposition(self, params):
        """Happy path: W = consumer surplus + both producer profits"""
        profile = StrategyProfile(q_s=0.125, q_b=0.5)
        margin = inverse_demand(profile.total, params) - params.c
        total = consumer_surplus(profile, params) + profit_self(profile, params)
        total += margin * profile.q_b
        assert total == pytest.approx(welfare(profile, params), abs=1e-12)

    def test_array_evaluation(self, params):
        """Happy path: welfare_at_total works elementwise"""
        import numpy as np

        values = welfare_at_total(np.array([0.0, 0.625, 0.75]), params)
        assert values.tolist() == pytest.approx([0.0, 0.2734375, 0.28125], abs=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(
        a=st.floats(0.2, 5.0),
        b=st.floats(0.5, 5.0),
        cost_share=st.floats(0.0, 0.9),
        m=st.floats(0.0, 2.0),
        q_s=st.floats(0.0, 3.0),
        q_b_share=st.floats(0.0, 1.0),
    )
    def test_distance_identity(self, a, b, cost_share, m, q_s, q_b_share):
        """Property: W = -(a/2) d^2 + (b-c)^2/(2a) + m for every valid profile"""
        c = cost_share * b
        market = MarketParams(a=a, b=b, c=c, m=m, f=(b - c) / a)
        profile = StrategyProfile(q_s=q_s, q_b=q_b_share * market.f)
        expected = welfare_from_distance(welfare_distance(profile, market), market)
        scale = max(1.0, abs(market.optimal_welfare))
        assert abs(welfare(profile, market) - expected) <= 1e-12 * scale * 10

    def test_strictly_decreasing_in_distance(self, params):
        """Property: a smaller distance means a larger welfare"""
        near = StrategyProfile(q_s=0.2, q_b=0.5)
        far = StrategyProfile(q_s=0.1, q_b=0.5)
        assert welfare_distance(near, params) < welfare_distance(far, params)
        assert welfare(near, params) > welfare(far, params)


@pytest.mark.unit
class TestProfitSelf:
    """Test the self-interested firm's profit"""

    def test_no_production(self, params):
        """Edge case: q_s = 0 earns nothing"""
        assert profit_self(StrategyProfile(q_s=0.0, q_b=0.3), params) == 0.0

    def test_monopoly(self, params):
        """Happy path: monopoly quantity 0.375 earns 0.140625"""
        assert profit_self(StrategyProfile(q_s=0.375, q_b=0.0), params) == 0.140625

    def test_price_at_cost(self, params):
        """Edge case: efficient total prices at marginal cost"""
        assert profit_self(StrategyProfile(q_s=0.25, q_b=0.5), params) == pytest.approx(0.0)


@pytest.mark.unit
class TestDesignedUtility:
    """Test U = W + gamma * profit_self"""

    def test_zero_gamma_is_welfare(self, params):
        """Happy path: gamma = 0 reduces to welfare"""
        profile = StrategyProfile(q_s=0.3, q_b=0.2)
        assert designed_utility(profile, CooperationLevel(gamma=0.0), params) == welfare(
            profile, params
        )

    def test_zero_profit_profile(self, params):
        """Edge case: gamma is irrelevant when firm S earns nothing"""
        profile = StrategyProfile(q_s=0.0, q_b=0.4)
        assert designed_utility(profile, 1.0, params) == welfare(profile, params)

    def test_fighting(self, params):
        """Regression test: gamma = -1 at (0.375, 0.25) is 0.2734375 - 0.046875"""
        profile = StrategyProfile(q_s=0.375, q_b=0.25)
        assert designed_utility(profile, -1.0, params) == pytest.approx(0.2265625, abs=1e-12)

    def test_non_finite_gamma_rejected(self, params):
        """Bad input: infinite cooperation level"""
        with pytest.raises(InvalidInputError):
            designed_utility(StrategyProfile(q_s=0.1, q_b=0.1), float("inf"), params)
