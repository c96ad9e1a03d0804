"""Planner strategies under complete, probabilistic and no information about K.

- optimal: one level above the realized level of firm S
- stochastic: maximizes expected welfare under a distribution of K
- robust: maximizes the worst case over all levels (the level-2 behavior)
"""

import logging
from typing import Optional

import numpy as np

from levelk_market.core.level_k import level_k_closed
from levelk_market.core.market_model import welfare_at_total
from levelk_market.exceptions import InvalidInputError
from levelk_market.models import Firm, MarketParams, RationalityDistribution

logger = logging.getLogger(__name__)

FEASIBILITY_TOLERANCE = 1e-12


def _self_quantities(dist: RationalityDistribution, params: MarketParams) -> np.ndarray:
    return np.array(
        [level_k_closed(k, Firm.SELF_INTERESTED, params) for k in dist.levels], dtype=float
    )


def optimal_strategy(k: int, params: MarketParams) -> float:
    """Best planner quantity when the level k of firm S is known: q_B^(k+1)."""
    return level_k_closed(k + 1, Firm.PLANNER, params)


def robust_strategy(params: MarketParams) -> float:
    """Maximin planner quantity min{(b - c)/(2a) + f/4, f}, equal to q_B^(2)."""
    return min(params.half_span + params.f / 4.0, params.f)


def expected_self_quantity(dist: RationalityDistribution, params: MarketParams) -> float:
    """E[q_S^(K)] under the given level distribution."""
    return dist.expectation(_self_quantities(dist, params))


def stochastic_strategy(dist: RationalityDistribution, params: MarketParams) -> float:
    """Planner quantity maximizing expected welfare: min{(b - c)/a - E[q_S^(K)], f}."""
    return min(params.span - expected_self_quantity(dist, params), params.f)


def expected_welfare(dist: RationalityDistribution, q_b: float, params: MarketParams) -> float:
    """E[W(q_S^(K), q_b)] over the level distribution."""
    totals = _self_quantities(dist, params) + q_b
    return dist.expectation(welfare_at_total(totals, params))


def _check_planner_quantity(q_b: float, params: MarketParams) -> None:
    if not 0.0 <= q_b <= params.f + FEASIBILITY_TOLERANCE:
        raise InvalidInputError(f"planner quantity {q_b} outside [0, f={params.f}]")


def vci(k: int, strategy_q_b: float, params: MarketParams) -> float:
    """Value of complete information against a fixed planner quantity.

    W(q_S^(k), q_B^(k+1)) - W(q_S^(k), strategy_q_b); never negative.

    Raises:
        InvalidInputError: If strategy_q_b lies outside [0, f]
    """
    _check_planner_quantity(strategy_q_b, params)
    q_s = level_k_closed(k, Firm.SELF_INTERESTED, params)
    informed = welfare_at_total(q_s + optimal_strategy(k, params), params)
    return informed - welfare_at_total(q_s + strategy_q_b, params)


def evii(
    dist: RationalityDistribution,
    params: MarketParams,
    stochastic_q_b: Optional[float] = None,
) -> float:
    """Expected value of incomplete information.

    E[W(q_S^(K), q_B^SS)] - E[W(q_S^(K), q_B^RS)]; zero whenever both
    strategies are capped at f.
    """
    if stochastic_q_b is None:
        stochastic_q_b = stochastic_strategy(dist, params)
    return expected_welfare(dist, stochastic_q_b, params) - expected_welfare(
        dist, robust_strategy(params), params
    )
