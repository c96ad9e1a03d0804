"""Level-k behavior: recursion, closed forms and the Nash equilibrium.

A level-0 firm plays the midpoint of its feasible set; a level-k firm best
responds to a level-(k-1) opponent. Closed forms are evaluated with exact
integer parity; levels above MAX_LEVEL return the k -> infinity limits.
"""

import logging
import math

from levelk_market.core.best_response import br_planner, br_planner_gamma, br_self
from levelk_market.core.market_model import GammaLike, gamma_value
from levelk_market.exceptions import InvalidInputError
from levelk_market.models import (
    INF,
    MAX_LEVEL,
    Firm,
    LevelSpec,
    MarketParams,
    StrategyProfile,
)

logger = logging.getLogger(__name__)


def _check_level(k: int) -> int:
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise InvalidInputError(f"level must be a non-negative integer, got {k!r}")
    return int(k)


def _power(base: float, exponent: int) -> float:
    """base ** exponent with 0 ** 0 == 1 and overflow mapped to infinity."""
    try:
        return base**exponent
    except OverflowError:
        return math.inf


def _ne_self(params: MarketParams) -> float:
    # Shared by every path that yields the equilibrium quantity of firm S.
    return params.half_span - params.f / 2.0


def level0(firm: Firm, params: MarketParams) -> float:
    """Midpoint of the feasible set: (b - c)/(2a) for S, f/2 for B."""
    return params.half_span if firm is Firm.SELF_INTERESTED else params.f / 2.0


def nash_limit(firm: Firm, params: MarketParams) -> float:
    """Equilibrium quantity of one firm, the level-infinity behavior."""
    return _ne_self(params) if firm is Firm.SELF_INTERESTED else params.f


def nash_equilibrium(params: MarketParams) -> StrategyProfile:
    """The unique Nash equilibrium ((b - c)/(2a) - f/2, f)."""
    return StrategyProfile(q_s=_ne_self(params), q_b=params.f)


def level_k_iterative(k: int, firm: Firm, params: MarketParams) -> float:
    """Level-k quantity by alternating best responses from level 0."""
    k = _check_level(k)
    q_s = level0(Firm.SELF_INTERESTED, params)
    q_b = level0(Firm.PLANNER, params)
    for _ in range(k):
        q_s, q_b = br_self(q_b, params), br_planner(q_s, params)
    return q_s if firm is Firm.SELF_INTERESTED else q_b


def level_k_gamma_iterative(k: int, gamma: GammaLike, firm: Firm, params: MarketParams) -> float:
    """Same recursion with the planner responding under the designed utility."""
    k = _check_level(k)
    g = gamma_value(gamma)
    q_s = level0(Firm.SELF_INTERESTED, params)
    q_b = level0(Firm.PLANNER, params)
    for _ in range(k):
        q_s, q_b = br_self(q_b, params), br_planner_gamma(q_s, g, params)
    return q_s if firm is Firm.SELF_INTERESTED else q_b


def level_k_closed(k: int, firm: Firm, params: MarketParams) -> float:
    """Level-k quantity from the parity-split closed forms.

    Args:
        k: Rationality level (non-negative integer)
        firm: Which supplier
        params: Market constants

    Returns:
        float: The same value level_k_iterative produces, in O(1)
    """
    k = _check_level(k)
    if k > MAX_LEVEL:
        return nash_limit(firm, params)

    span, f = params.span, params.f
    if k % 2 == 0:
        scale = math.ldexp(1.0, -(k // 2))
        if firm is Firm.SELF_INTERESTED:
            return max(span * math.ldexp(1.0, -(k // 2 + 1)), _ne_self(params))
        return min((1.0 - scale) * span + f * scale / 2.0, f)

    half_levels = (k + 1) // 2
    if firm is Firm.SELF_INTERESTED:
        shrink = math.ldexp(1.0, -half_levels)
        return max(span * shrink - f * shrink / 2.0, _ne_self(params))
    return min((1.0 - math.ldexp(1.0, -half_levels)) * span, f)


def level_k_gamma(k: int, gamma: GammaLike, firm: Firm, params: MarketParams) -> float:
    """Level-k quantity when the planner maximizes W + gamma * profit_self.

    Three regimes: gamma < -1 (the planner always plays f from level 1 on),
    -1 <= gamma <= 1 and gamma > 1. Level 0 does not depend on gamma.
    """
    k = _check_level(k)
    g = gamma_value(gamma)
    span, f = params.span, params.f
    if k == 0:
        return level0(firm, params)

    if g < -1.0:
        if firm is Firm.PLANNER:
            return f
        return span / 2.0 - f / 4.0 if k == 1 else _ne_self(params)

    ratio = (1.0 + g) / 2.0
    if k % 2 == 0:
        phi = _power(ratio, k // 2)
        if g <= 1.0:
            if firm is Firm.SELF_INTERESTED:
                return max(phi / 2.0 * span, _ne_self(params))
            return min((1.0 - phi) * span + phi * f / 2.0, f)
        if firm is Firm.SELF_INTERESTED:
            return params.half_span
        return max(span - phi * (span - f / 2.0), 0.0)

    psi = _power(ratio, (k - 1) // 2)
    if g <= 1.0:
        if firm is Firm.SELF_INTERESTED:
            return max(psi / 2.0 * (span - f / 2.0), _ne_self(params))
        return min((1.0 - psi * ratio) * span, f)
    if firm is Firm.SELF_INTERESTED:
        return min(psi / 2.0 * (span - f / 2.0), params.half_span)
    return 0.0


def level_k_profile(spec: LevelSpec, params: MarketParams) -> StrategyProfile:
    """Profile (q_S^(k), q_B^(k+delta)); delta = INF puts B at its equilibrium f."""
    q_s = level_k_closed(spec.k, Firm.SELF_INTERESTED, params)
    if spec.delta == INF:
        q_b = nash_limit(Firm.PLANNER, params)
    else:
        q_b = level_k_closed(spec.planner_level, Firm.PLANNER, params)
    return StrategyProfile(q_s=q_s, q_b=q_b)
