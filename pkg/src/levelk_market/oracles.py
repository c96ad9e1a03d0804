"""Brute-force verifiers for the closed forms.

Everything here runs on uniform grids and plain best-response iteration and
shares no shortcuts with the closed forms. Grid ties go to the smallest point.
"""

from typing import Callable, Iterable, Tuple

import numpy as np

from levelk_market.core.best_response import br_self, br_planner
from levelk_market.core.level_k import level0
from levelk_market.core.market_model import welfare_at_total
from levelk_market.models import CooperationLevel, Firm, GridSpec, MarketParams


def grid_argmax(objective: Callable[[float], float], grid: GridSpec) -> Tuple[float, float]:
    """Grid point with the largest objective value, and that value."""
    points = grid.points()
    values = np.array([objective(float(x)) for x in points], dtype=float)
    best = int(np.argmax(values))
    return float(points[best]), float(values[best])


def self_quantities(levels: Iterable[int], params: MarketParams) -> np.ndarray:
    """q_S^(k) for each requested level by best-response iteration."""
    levels = sorted(set(int(k) for k in levels))
    q_s = level0(Firm.SELF_INTERESTED, params)
    q_b = level0(Firm.PLANNER, params)
    found = {}
    for k in range(levels[-1] + 1):
        if k:
            q_s, q_b = br_self(q_b, params), br_planner(q_s, params)
        found[k] = q_s
    return np.array([found[k] for k in levels], dtype=float)


def grid_maximin(
    outer_grid: GridSpec,
    inner_levels: Iterable[int],
    params: MarketParams,
    include_limit: bool = True,
) -> Tuple[float, float]:
    """Planner quantity maximizing the worst-case welfare over opponent levels.

    Args:
        outer_grid: Candidate planner quantities
        inner_levels: Opponent levels for the inner minimum
        params: Market constants
        include_limit: Also include the k -> infinity quantity (b - c)/(2a) - f/2

    Returns:
        Tuple[float, float]: (argmax quantity, maximin welfare)
    """
    q_s = self_quantities(inner_levels, params)
    if include_limit:
        q_s = np.append(q_s, (params.b - params.c) / (2.0 * params.a) - params.f / 2.0)
    q_b = outer_grid.points()
    worst = welfare_at_total(q_s[:, None] + q_b[None, :], params).min(axis=0)
    best = int(np.argmax(worst))
    return float(q_b[best]), float(worst[best])


def gamma_sweep(k: int, grid: GridSpec, params: MarketParams) -> Tuple[CooperationLevel, float]:
    """Cooperation level on the grid with the largest equal-level welfare.

    All grid points are iterated at once: k rounds of the two best
    responses, the planner's taken under the designed utility.
    """
    gammas = grid.points()
    a, b, c, f = params.a, params.b, params.c, params.f
    q_s = np.full_like(gammas, (b - c) / (2.0 * a))
    q_b = np.full_like(gammas, f / 2.0)
    for _ in range(k):
        q_s, q_b = (
            np.maximum((b - c - a * q_b) / (2.0 * a), 0.0),
            np.clip((b - c - a * (1.0 + gammas) * q_s) / a, 0.0, f),
        )
    values = welfare_at_total(q_s + q_b, params)
    best = int(np.argmax(values))
    return CooperationLevel(gamma=float(gammas[best])), float(values[best])
