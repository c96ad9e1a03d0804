"""Closed-form best responses of both suppliers.

Payoffs are strictly concave in the own quantity, so each map returns the
unique maximizer.
"""

from levelk_market.core.market_model import GammaLike, gamma_value
from levelk_market.models import MarketParams


def br_self(q_b: float, params: MarketParams) -> float:
    """Profit-maximizing quantity of firm S against q_b."""
    return max((params.b - params.c - params.a * q_b) / (2.0 * params.a), 0.0)


def br_planner(q_s: float, params: MarketParams) -> float:
    """Welfare-maximizing planner quantity in [0, f] against q_s."""
    return max(min((params.b - params.c - params.a * q_s) / params.a, params.f), 0.0)


def br_planner_gamma(q_s: float, gamma: GammaLike, params: MarketParams) -> float:
    """Planner quantity in [0, f] maximizing W + gamma * profit_self.

    For gamma < -1 the unconstrained optimum exceeds (b - c)/a and the
    response is f for every q_s.
    """
    weight = 1.0 + gamma_value(gamma)
    return max(min((params.b - params.c - params.a * weight * q_s) / params.a, params.f), 0.0)
