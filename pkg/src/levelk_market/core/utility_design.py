"""Designing the planner's utility W + gamma * profit_self.

Both firms are assumed to reason at the same level k. The designer picks the
cooperation level gamma that maximizes the resulting welfare.
"""

import logging

from levelk_market.core.level_k import level_k_gamma
from levelk_market.core.market_model import GammaLike, welfare
from levelk_market.core.welfare_analysis import equilibrium_performance, welfare_ratio
from levelk_market.exceptions import InvalidInputError
from levelk_market.models import CooperationLevel, Firm, MarketParams, StrategyProfile

logger = logging.getLogger(__name__)


def _check_positive_level(k: int) -> int:
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise InvalidInputError(f"cooperation design needs a positive level, got {k!r}")
    return int(k)


def _fractional_power(base: float, exponent: float) -> float:
    # Bases below zero only appear through rounding when f equals (b - c)/a.
    return max(base, 0.0) ** exponent


def equal_level_profile(k: int, gamma: GammaLike, params: MarketParams) -> StrategyProfile:
    return StrategyProfile(
        q_s=level_k_gamma(k, gamma, Firm.SELF_INTERESTED, params),
        q_b=level_k_gamma(k, gamma, Firm.PLANNER, params),
    )


def equal_level_total(k: int, gamma: GammaLike, params: MarketParams) -> float:
    return equal_level_profile(k, gamma, params).total


def equal_level_welfare(k: int, gamma: GammaLike, params: MarketParams) -> float:
    """Welfare when both firms play level k and the planner uses the designed utility."""
    return welfare(equal_level_profile(k, gamma, params), params)


def optimal_cooperation_level(k: int, params: MarketParams) -> CooperationLevel:
    """An optimal cooperation level gamma* for equal-level play, always in [-1, 1].

    Args:
        k: Common rationality level (k >= 1)
        params: Market constants

    Returns:
        CooperationLevel: The closed-form optimum (one of several when
        has_multiple_optima(k) holds)

    Raises:
        InvalidInputError: If k < 1
    """
    k = _check_positive_level(k)
    span, f = params.span, params.f
    if k % 2 == 0:
        base = (span - f) / (span - f / 2.0)
        gamma = 2.0 * _fractional_power(base, 2.0 / k) - 1.0
    else:
        base = (span - f) / span
        gamma = max(-(f / 2.0) / span, 2.0 * _fractional_power(base, 2.0 / (k + 1)) - 1.0)
    return CooperationLevel(gamma=gamma)


def optimal_total_even(params: MarketParams) -> float:
    """Total production under gamma* for even k: (B^2 + fB - f^2)/(2B - f), B = (b - c)/a."""
    span, f = params.span, params.f
    return (span**2 + f * span - f**2) / (2.0 * span - f)


def has_multiple_optima(k: int, params: MarketParams) -> bool:
    """Whether every gamma <= -1 is optimal as well, for odd k.

    For k = 1 this holds iff beta <= 2/3; for odd k >= 3 it is decided by
    comparing ((B - f)/(B - f/2))^(2/(k-1)) with ((B - f)/B)^(2/(k+1)).

    Raises:
        InvalidInputError: For even or non-positive k
    """
    k = _check_positive_level(k)
    if k % 2 == 0:
        raise InvalidInputError(f"the multiple-optima condition applies to odd k, got {k}")
    span, f = params.span, params.f
    if k == 1:
        # gamma* = 1 - 2*beta puts B at f, the quantity every gamma < -1 produces.
        beta = params.beta
        return 1.0 - 2.0 * beta >= -beta / 2.0
    left = _fractional_power((span - f) / (span - f / 2.0), 2.0 / (k - 1))
    right = _fractional_power((span - f) / span, 2.0 / (k + 1))
    return left >= right


def por_with_design(k: int, params: MarketParams) -> float:
    """Price of rationality when the planner uses gamma*; never above 1.

    Raises:
        ZeroWelfareError: If the designed welfare is zero
    """
    gamma_star = optimal_cooperation_level(k, params)
    designed = equal_level_welfare(k, gamma_star, params)
    return welfare_ratio(equilibrium_performance(params), designed)
