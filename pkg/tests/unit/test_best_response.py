"""Unit tests for the closed-form best responses.

Maximizer checks compare against an exhaustive grid search.
"""

import numpy as np
import pytest

from levelk_market.core.best_response import br_planner, br_planner_gamma, br_self
from levelk_market.core.market_model import designed_utility, profit_self, welfare
from levelk_market.models import GridSpec, StrategyProfile
from levelk_market.oracles import grid_argmax


@pytest.mark.unit
class TestBrSelf:
    """Test the self-interested firm's best response"""

    def test_saturated_market(self, params):
        """Edge case: q_b = (b-c)/a leaves nothing to sell above cost"""
        assert br_self(params.span, params) == 0.0

    def test_monopoly(self, params):
        """Happy path: q_b = 0 gives the monopoly quantity"""
        assert br_self(0.0, params) == 0.375

    def test_against_capacity(self, params):
        """Happy path: q_b = 0.5 gives (0.75 - 0.5)/2"""
        assert br_self(0.5, params) == 0.125

    def test_matches_grid_argmax(self, params):
        """Property: no grid quantity earns more than the best response"""
        grid = GridSpec(lo=0.0, hi=params.b / params.a, n=2001)
        for q_b in np.linspace(0.0, params.f, 25):
            best = br_self(q_b, params)
            _, grid_value = grid_argmax(
                lambda q: profit_self(StrategyProfile(q_s=q, q_b=q_b), params), grid
            )
            value = profit_self(StrategyProfile(q_s=best, q_b=q_b), params)
            assert value >= grid_value - 1e-9

    def test_non_increasing(self, params):
        """Property: br_self is non-increasing in q_b and stays in [0, (b-c)/(2a)]"""
        values = [br_self(q, params) for q in np.linspace(0.0, params.f, 200)]
        assert all(later <= earlier for earlier, later in zip(values, values[1:]))
        assert all(0.0 <= v <= params.half_span for v in values)


@pytest.mark.unit
class TestBrPlanner:
    """Test the planner's best response"""

    def test_saturated_market(self, params):
        """Edge case: q_s >= (b-c)/a leaves nothing for the planner"""
        assert br_planner(0.9, params) == 0.0

    def test_capacity_clip(self, params):
        """Happy path: unconstrained optimum 0.75 is clipped to f = 0.5"""
        assert br_planner(0.0, params) == 0.5

    def test_interior(self, params):
        """Happy path: q_s = 0.375 gives 0.375"""
        assert br_planner(0.375, params) == 0.375

    def test_matches_grid_argmax(self, params):
        """Property: no feasible grid quantity gives more welfare"""
        grid = GridSpec(lo=0.0, hi=params.f, n=2001)
        for q_s in np.linspace(0.0, params.f, 25):
            best = br_planner(q_s, params)
            _, grid_value = grid_argmax(
                lambda q: welfare(StrategyProfile(q_s=q_s, q_b=q), params), grid
            )
            assert welfare(StrategyProfile(q_s=q_s, q_b=best), params) >= grid_value - 1e-9

    def test_non_increasing(self, params):
        """Property: br_planner is non-increasing in q_s and stays in [0, f]"""
        values = [br_planner(q, params) for q in np.linspace(0.0, 1.0, 200)]
        assert all(later <= earlier for earlier, later in zip(values, values[1:]))
        assert all(0.0 <= v <= params.f for v in values)


@pytest.mark.unit
class TestBrPlannerGamma:
    """Test the planner's best response under the designed utility"""

    def test_zero_gamma_reduces(self, params):
        """Happy path: gamma = 0 is the plain planner response"""
        for q_s in np.linspace(0.0, 1.0, 41):
            assert br_planner_gamma(q_s, 0.0, params) == br_planner(q_s, params)

    def test_fighting_always_capacity(self, params):
        """Edge case: gamma < -1 always produces f"""
        for q_s in np.linspace(0.0, 1.0, 41):
            assert br_planner_gamma(q_s, -2.0, params) == params.f

    def test_cooperation(self, params):
        """Happy path: gamma = 1, q_s = 0.375 gives 0.75 - 2*0.375 = 0"""
        assert br_planner_gamma(0.375, 1.0, params) == 0.0

    @pytest.mark.parametrize("gamma", [-1.0, -0.5, 0.5, 1.0, 2.0])
    def test_matches_grid_argmax(self, params, gamma):
        """Property: no feasible grid quantity gives more designed utility"""
        grid = GridSpec(lo=0.0, hi=params.f, n=2001)
        for q_s in np.linspace(0.0, params.f, 15):
            best = br_planner_gamma(q_s, gamma, params)
            _, grid_value = grid_argmax(
                lambda q: designed_utility(StrategyProfile(q_s=q_s, q_b=q), gamma, params), grid
            )
            value = designed_utility(StrategyProfile(q_s=q_s, q_b=best), gamma, params)
            assert value >= grid_value - 1e-9

    @pytest.mark.parametrize("gamma", [-0.9, 0.0, 0.5, 3.0])
    def test_non_increasing(self, params, gamma):
        """Property: non-increasing in q_s for gamma > -1, always within [0, f]"""
        values = [br_planner_gamma(q, gamma, params) for q in np.linspace(0.0, 1.0, 200)]
        assert all(later <= earlier for earlier, later in zip(values, values[1:]))
        assert all(0.0 <= v <= params.f for v in values)
