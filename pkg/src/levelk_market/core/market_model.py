"""Demand, payoffs and welfare of the two-supplier market.

Demand is always the sum of the two quantities; it is never stored on its own.
"""

import math
from typing import Union

import numpy as np

from levelk_market.exceptions import InvalidInputError
from levelk_market.models import CooperationLevel, MarketParams, StrategyProfile

GammaLike = Union[CooperationLevel, float]


def gamma_value(gamma: GammaLike) -> float:
    """Unwrap a cooperation level, rejecting non-finite values."""
    value = gamma.gamma if isinstance(gamma, CooperationLevel) else float(gamma)
    if not math.isfinite(value):
        raise InvalidInputError(f"cooperation level must be finite, got {value}")
    return value


def inverse_demand(q_d, params: MarketParams):
    """Market-clearing price b - a*q_d (negative above b/a)."""
    return params.b - params.a * q_d


def consumer_utility(q_d, params: MarketParams):
    """u(q_d) = -a/2 q_d^2 + b q_d + m."""
    return -params.a / 2.0 * q_d**2 + params.b * q_d + params.m


def welfare_at_total(q_d, params: MarketParams):
    """Social welfare as a function of total production.

    Works elementwise on numpy arrays.
    """
    return consumer_utility(q_d, params) - params.c * q_d


def welfare(profile: StrategyProfile, params: MarketParams) -> float:
    """W(q_s, q_b) = u(q_s + q_b) - c*(q_s + q_b); also the planner's payoff."""
    return welfare_at_total(profile.total, params)


profit_planner = welfare


def price(profile: StrategyProfile, params: MarketParams) -> float:
    return inverse_demand(profile.total, params)


def profit_self(profile: StrategyProfile, params: MarketParams) -> float:
    """Profit (p - c)*q_s of the self-interested firm."""
    return (price(profile, params) - params.c) * profile.q_s


def consumer_surplus(profile: StrategyProfile, params: MarketParams) -> float:
    """Consumer net benefit u(q_d) - p*q_d."""
    q_d = profile.total
    return consumer_utility(q_d, params) - inverse_demand(q_d, params) * q_d


def optimal_total(params: MarketParams) -> float:
    """Total production (b - c)/a at which price equals marginal cost."""
    return params.span


def welfare_distance(profile: StrategyProfile, params: MarketParams) -> float:
    """Distance |(b - c)/a - q_s - q_b| from the efficient total.

    Welfare equals -(a/2) d^2 + (b - c)^2/(2a) + m, so it strictly decreases in d.
    """
    return abs(params.span - profile.total)


def welfare_from_distance(distance, params: MarketParams):
    return -params.a / 2.0 * np.square(distance) + params.optimal_welfare


def designed_utility(profile: StrategyProfile, gamma: GammaLike, params: MarketParams) -> float:
    """Planner's designed utility U = W + gamma * profit_self."""
    return welfare(profile, params) + gamma_value(gamma) * profit_self(profile, params)
