"""Level-k performance, equilibrium performance and the price of rationality.

PoR = W(NE) / W(level-k profile). Values above one mean bounded rationality
costs welfare; the regions below one are open intervals in the normalized
capacity beta = f*a/(b - c).
"""

import logging
import math

from levelk_market.core.level_k import level_k_profile, nash_equilibrium
from levelk_market.core.market_model import welfare
from levelk_market.exceptions import InvalidInputError, ZeroWelfareError
from levelk_market.models import (
    INF,
    Delta,
    LevelSpec,
    LinearSegment,
    MarketParams,
    PorRegion,
    ProductionBreakpoints,
)

logger = logging.getLogger(__name__)

ZERO_WELFARE_TOLERANCE = 1e-12


def welfare_ratio(numerator: float, denominator: float) -> float:
    """Divide two welfare values, refusing a vanishing denominator.

    Raises:
        ZeroWelfareError: If |denominator| <= 1e-12
    """
    if abs(denominator) <= ZERO_WELFARE_TOLERANCE:
        raise ZeroWelfareError(f"welfare {denominator!r} is zero, ratio is undefined")
    return numerator / denominator


def level_k_performance(spec: LevelSpec, params: MarketParams) -> float:
    """Social welfare of the level-k profile (q_S^(k), q_B^(k+delta))."""
    return welfare(level_k_profile(spec, params), params)


def level_k_total(spec: LevelSpec, params: MarketParams) -> float:
    return level_k_profile(spec, params).total


def equilibrium_performance(params: MarketParams) -> float:
    """Social welfare at the Nash equilibrium."""
    return welfare(nash_equilibrium(params), params)


def price_of_rationality(spec: LevelSpec, params: MarketParams) -> float:
    """W(NE) divided by the level-k performance.

    Raises:
        ZeroWelfareError: If the level-k performance is zero
    """
    return welfare_ratio(equilibrium_performance(params), level_k_performance(spec, params))


def _check_region_levels(k: int, delta: Delta) -> None:
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise InvalidInputError(f"level must be a non-negative integer, got {k!r}")
    if delta == INF:
        return
    if delta < 0:
        raise InvalidInputError(
            f"delta={delta} < 0: the price of rationality is never below 1 there"
        )
    if k + delta == 0:
        raise InvalidInputError("k = delta = 0 reproduces the equilibrium total, PoR is 1")


def por_lt_one_region(k: int, delta: Delta) -> PorRegion:
    """Open beta-interval on which PoR(k, delta) < 1.

    The bounds depend on the parity of k and on delta only through the cases
    {0, 1, >= 2} (even k) or {0, {1, 2}, >= 3} (odd k); delta = INF behaves
    like the largest case.

    Raises:
        InvalidInputError: If delta < 0 or k + delta == 0
    """
    _check_region_levels(k, delta)
    if k % 2 == 0:
        lower = 1.0 - math.ldexp(1.0, -(k // 2))
        if delta != INF and delta <= 1:
            upper = 1.0
        else:
            upper = 1.0 - 1.0 / (3.0 * math.ldexp(1.0, k // 2))
    else:
        scale = math.ldexp(1.0, (k + 1) // 2)
        lower = 1.0 - 1.0 / (scale - 1.0)
        if delta == 0:
            upper = 1.0 - 1.0 / (scale + 1.0)
        elif delta != INF and delta <= 2:
            upper = 1.0
        else:
            upper = 1.0 - 1.0 / (3.0 * scale - 1.0)
    return PorRegion(lower=lower, upper=upper)


def total_production_breakpoints(
    k: int, delta: int, params: MarketParams
) -> ProductionBreakpoints:
    """Piecewise-linear total production in beta for even k and delta >= 2.

    Below ``t_zy`` firm S plays its equilibrium quantity and B plays f;
    between the thresholds S has left its floor while B is still capped;
    above ``t_xy`` the planner's own level drops below f.

    Raises:
        InvalidInputError: Outside even k with an integer delta >= 2
    """
    if isinstance(k, bool) or int(k) != k or k < 0 or k % 2:
        raise InvalidInputError(f"breakpoints are defined for even k, got {k!r}")
    if delta == INF or delta < 2:
        raise InvalidInputError(f"breakpoints need an integer delta >= 2, got {delta!r}")

    span = params.span
    self_floor = math.ldexp(1.0, -(k // 2 + 1))
    t_zy = 1.0 - math.ldexp(1.0, -(k // 2))

    planner_level = k + delta
    if planner_level % 2 == 0:
        j = planner_level // 2
        t_xy = 1.0 - 1.0 / (math.ldexp(1.0, j + 1) - 1.0)
        x = LinearSegment(
            intercept=(1.0 - math.ldexp(1.0, -j) + self_floor) * span,
            slope=math.ldexp(1.0, -(j + 1)) * span,
        )
    else:
        j = (planner_level + 1) // 2
        t_xy = 1.0 - math.ldexp(1.0, -j)
        x = LinearSegment(intercept=(t_xy + self_floor) * span, slope=0.0)

    return ProductionBreakpoints(
        t_zy=t_zy,
        t_xy=t_xy,
        z=LinearSegment(intercept=0.5 * span, slope=0.5 * span),
        y=LinearSegment(intercept=self_floor * span, slope=span),
        x=x,
    )
