"""Experiment harness: parameter sweeps over the closed forms.

Each experiment produces one row per sweep point with the full parameter
tuple, so any row can be re-run on its own. Rows are computed on a thread
pool and kept in sweep order; a single writer emits the table.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, ValidationError

from levelk_market.config import Settings, get_settings
from levelk_market.core.level_k import level_k_closed, level_k_profile, nash_equilibrium
from levelk_market.core.market_model import (
    consumer_surplus,
    price,
    profit_self,
    welfare,
    welfare_at_total,
    welfare_distance,
)
from levelk_market.core.planner_strategies import (
    evii,
    optimal_strategy,
    robust_strategy,
    stochastic_strategy,
    vci,
)
from levelk_market.core.utility_design import (
    equal_level_profile,
    has_multiple_optima,
    optimal_cooperation_level,
    por_with_design,
)
from levelk_market.core.welfare_analysis import (
    equilibrium_performance,
    por_lt_one_region,
    price_of_rationality,
)
from levelk_market.exceptions import ConfigError
from levelk_market.infrastructure.tables import write_table
from levelk_market.models import (
    INF,
    MAX_LEVEL,
    AnalysisReport,
    Delta,
    ExperimentConfig,
    ExperimentKind,
    Firm,
    LevelSpec,
    MarketParams,
    RationalityDistribution,
)

logger = logging.getLogger(__name__)

_PARAMS = ("a", "b", "c", "m")

EXPERIMENT_COLUMNS: Dict[ExperimentKind, Tuple[str, ...]] = {
    ExperimentKind.PRODUCTION_VS_F: _PARAMS
    + ("f", "beta", "k", "delta", "q_s", "q_b", "total", "q_s_ne", "q_b_ne"),
    ExperimentKind.POR_VS_F: _PARAMS
    + ("f", "beta", "k", "delta", "q_s", "q_b", "welfare", "welfare_ne", "por"),
    ExperimentKind.WELFARE_VS_DELTA: _PARAMS
    + ("f", "k", "delta", "q_s", "q_b", "total", "welfare"),
    ExperimentKind.FIXED_SUM_LEVELS: _PARAMS
    + ("f", "level_sum", "k", "delta", "q_s", "q_b", "total", "welfare"),
    ExperimentKind.POR_REGION: _PARAMS
    + ("k", "delta", "beta_lower", "beta_upper", "f_lower", "f_upper", "empty"),
    ExperimentKind.VALUE_OF_INFORMATION: _PARAMS
    + (
        "f",
        "tau",
        "k_max",
        "k",
        "q_b_optimal",
        "q_b_stochastic",
        "q_b_robust",
        "welfare_optimal",
        "welfare_stochastic",
        "welfare_robust",
        "vci_stochastic",
        "vci_robust",
        "evii",
    ),
    ExperimentKind.OPTIMAL_GAMMA: _PARAMS
    + ("f", "k", "gamma_star", "multiple_optima", "total", "welfare"),
    ExperimentKind.POR_WITH_DESIGN: _PARAMS
    + ("f", "k", "gamma_star", "welfare_design", "welfare_ne", "por"),
}

DEFAULT_REGION_DELTAS: Tuple[int, ...] = (0, 1, 2, 3, 4, 5)


class Sweep(BaseModel):
    """Validated sweep ranges of one experiment."""

    model_config = ConfigDict(frozen=True)

    market: MarketParams
    capacities: Tuple[float, ...]
    levels: Tuple[int, ...]
    deltas: Tuple[Delta, ...]


def _market_of(config: ExperimentConfig) -> MarketParams:
    try:
        span = (config.b - config.c) / config.a
        return MarketParams(a=config.a, b=config.b, c=config.c, m=config.m, f=span)
    except (ValidationError, ZeroDivisionError) as e:
        raise ConfigError(f"invalid market constants: {e}", fields=_PARAMS) from e


def _capacities(config: ExperimentConfig, market: MarketParams) -> Tuple[float, ...]:
    if config.f_values:
        values, fields = list(config.f_values), ("f_values",)
    else:
        if config.f_points < 1:
            raise ConfigError("the capacity grid needs at least one point", fields=("f_points",))
        f_max = market.span if config.f_max is None else config.f_max
        values = list(np.linspace(config.f_min, f_max, config.f_points))
        fields = ("f_min", "f_max")
    bad = [f for f in values if not 0.0 < f <= market.span]
    if bad:
        raise ConfigError(
            f"capacities {bad} outside (0, (b-c)/a = {market.span}]", fields=fields
        )
    return tuple(float(f) for f in values)


def _levels(config: ExperimentConfig) -> Tuple[int, ...]:
    kind = config.experiment
    field = "realized_levels" if kind is ExperimentKind.VALUE_OF_INFORMATION else "k_values"
    if kind is ExperimentKind.FIXED_SUM_LEVELS and "k_values" not in config.model_fields_set:
        levels = list(range(config.level_sum + 1))
    else:
        levels = list(getattr(config, field))
    if not levels:
        raise ConfigError("level sweep is empty", fields=(field,))
    if any(k < 0 or k > MAX_LEVEL for k in levels):
        raise ConfigError(f"levels must lie in [0, {MAX_LEVEL}]", fields=(field,))
    if config.experiment in (ExperimentKind.OPTIMAL_GAMMA, ExperimentKind.POR_WITH_DESIGN):
        if min(levels) < 1:
            raise ConfigError("cooperation design needs k >= 1", fields=(field,))
    return tuple(levels)


def _deltas(config: ExperimentConfig, levels: Sequence[int]) -> Tuple[Delta, ...]:
    explicit = "deltas" in config.model_fields_set
    kind = config.experiment
    if kind is ExperimentKind.POR_REGION:
        deltas = list(config.deltas) if explicit else list(DEFAULT_REGION_DELTAS)
        if any(d != INF and d < 0 for d in deltas):
            raise ConfigError("PoR regions need delta >= 0", fields=("deltas",))
    elif kind is ExperimentKind.WELFARE_VS_DELTA:
        default = range(-max(levels), config.delta_max + 1)
        deltas = list(config.deltas) if explicit else list(default)
    elif kind in (ExperimentKind.PRODUCTION_VS_F, ExperimentKind.POR_VS_F):
        deltas = list(config.deltas)
        if any(d != INF and d < -min(levels) for d in deltas):
            raise ConfigError(
                f"deltas below -k={-min(levels)} put the planner below level 0",
                fields=("deltas",),
            )
    else:
        return ()
    if not deltas:
        raise ConfigError("delta sweep is empty", fields=("deltas",))
    return tuple(deltas)


def validate_config(config: ExperimentConfig) -> Sweep:
    """Resolve and check the sweep ranges of a configuration.

    Raises:
        ConfigError: Naming the offending fields
    """
    market = _market_of(config)
    if config.experiment is ExperimentKind.FIXED_SUM_LEVELS and config.level_sum < 0:
        raise ConfigError("level_sum must be non-negative", fields=("level_sum",))
    if config.experiment is ExperimentKind.VALUE_OF_INFORMATION:
        if config.tau <= 0:
            raise ConfigError("tau must be positive", fields=("tau",))
        if config.k_max < 0:
            raise ConfigError("k_max must be non-negative", fields=("k_max",))
    capacities = (
        () if config.experiment is ExperimentKind.POR_REGION else _capacities(config, market)
    )
    levels = _levels(config)
    return Sweep(
        market=market, capacities=capacities, levels=levels, deltas=_deltas(config, levels)
    )


def _base_row(params: MarketParams) -> dict:
    return {"a": params.a, "b": params.b, "c": params.c, "m": params.m, "f": params.f}


def _production_row(params: MarketParams, k: int, delta: Delta) -> dict:
    profile = level_k_profile(LevelSpec(k=k, delta=delta), params)
    ne = nash_equilibrium(params)
    return {
        **_base_row(params),
        "beta": params.beta,
        "k": k,
        "delta": delta,
        "q_s": profile.q_s,
        "q_b": profile.q_b,
        "total": profile.total,
        "q_s_ne": ne.q_s,
        "q_b_ne": ne.q_b,
    }


def _por_row(params: MarketParams, k: int, delta: Delta) -> dict:
    spec = LevelSpec(k=k, delta=delta)
    profile = level_k_profile(spec, params)
    return {
        **_base_row(params),
        "beta": params.beta,
        "k": k,
        "delta": delta,
        "q_s": profile.q_s,
        "q_b": profile.q_b,
        "welfare": welfare(profile, params),
        "welfare_ne": equilibrium_performance(params),
        "por": price_of_rationality(spec, params),
    }


def _welfare_row(
    params: MarketParams, k: int, delta: Delta, level_sum: Optional[int] = None
) -> dict:
    profile = level_k_profile(LevelSpec(k=k, delta=delta), params)
    row = _base_row(params)
    if level_sum is not None:
        row["level_sum"] = level_sum
    row.update(
        k=k,
        delta=delta,
        q_s=profile.q_s,
        q_b=profile.q_b,
        total=profile.total,
        welfare=welfare(profile, params),
    )
    return row


def _region_row(params: MarketParams, k: int, delta: Delta) -> dict:
    region = por_lt_one_region(k, delta)
    row = {name: getattr(params, name) for name in _PARAMS}
    row.update(
        k=k,
        delta=delta,
        beta_lower=region.lower,
        beta_upper=region.upper,
        f_lower=region.lower * params.span,
        f_upper=region.upper * params.span,
        empty=region.empty,
    )
    return row


def _information_row(
    params: MarketParams, k: int, dist: RationalityDistribution, tau: float, k_max: int
) -> dict:
    q_s = level_k_closed(k, Firm.SELF_INTERESTED, params)
    q_opt = optimal_strategy(k, params)
    q_ss = stochastic_strategy(dist, params)
    q_rs = robust_strategy(params)
    return {
        **_base_row(params),
        "tau": tau,
        "k_max": k_max,
        "k": k,
        "q_b_optimal": q_opt,
        "q_b_stochastic": q_ss,
        "q_b_robust": q_rs,
        "welfare_optimal": welfare_at_total(q_s + q_opt, params),
        "welfare_stochastic": welfare_at_total(q_s + q_ss, params),
        "welfare_robust": welfare_at_total(q_s + q_rs, params),
        "vci_stochastic": vci(k, q_ss, params),
        "vci_robust": vci(k, q_rs, params),
        "evii": evii(dist, params, stochastic_q_b=q_ss),
    }


def _gamma_row(params: MarketParams, k: int) -> dict:
    gamma_star = optimal_cooperation_level(k, params)
    profile = equal_level_profile(k, gamma_star, params)
    return {
        **_base_row(params),
        "k": k,
        "gamma_star": gamma_star.gamma,
        "multiple_optima": has_multiple_optima(k, params) if k % 2 else None,
        "total": profile.total,
        "welfare": welfare(profile, params),
    }


def _design_row(params: MarketParams, k: int) -> dict:
    gamma_star = optimal_cooperation_level(k, params)
    return {
        **_base_row(params),
        "k": k,
        "gamma_star": gamma_star.gamma,
        "welfare_design": welfare(equal_level_profile(k, gamma_star, params), params),
        "welfare_ne": equilibrium_performance(params),
        "por": por_with_design(k, params),
    }


def _tasks(config: ExperimentConfig, sweep: Sweep) -> List[Callable[[], dict]]:
    kind = config.experiment
    markets = [sweep.market.with_capacity(f) for f in sweep.capacities]

    if kind is ExperimentKind.POR_REGION:
        return [
            partial(_region_row, sweep.market, k, d)
            for k in sweep.levels
            for d in sweep.deltas
            if not (d != INF and k + d == 0)
        ]
    if kind in (ExperimentKind.PRODUCTION_VS_F, ExperimentKind.POR_VS_F):
        row = _production_row if kind is ExperimentKind.PRODUCTION_VS_F else _por_row
        return [partial(row, p, k, d) for p in markets for k in sweep.levels for d in sweep.deltas]
    if kind is ExperimentKind.WELFARE_VS_DELTA:
        return [
            partial(_welfare_row, p, k, d)
            for p in markets
            for k in sweep.levels
            for d in sweep.deltas
            if d == INF or d >= -k
        ]
    if kind is ExperimentKind.FIXED_SUM_LEVELS:
        total = config.level_sum
        return [
            partial(_welfare_row, p, k, total - 2 * k, total)
            for p in markets
            for k in sweep.levels
            if k <= total
        ]
    if kind is ExperimentKind.VALUE_OF_INFORMATION:
        dist = RationalityDistribution.truncated_poisson(config.tau, config.k_max)
        return [
            partial(_information_row, p, k, dist, config.tau, config.k_max)
            for p in markets
            for k in sweep.levels
        ]
    row = _gamma_row if kind is ExperimentKind.OPTIMAL_GAMMA else _design_row
    return [partial(row, p, k) for p in markets for k in sweep.levels]


def build_table(config: ExperimentConfig, workers: Optional[int] = None) -> pd.DataFrame:
    """Compute the result table of an experiment without writing it.

    Args:
        config: Validated experiment configuration
        workers: Thread pool size, defaults to settings.sweep_workers

    Returns:
        pd.DataFrame: One row per sweep point, columns in EXPERIMENT_COLUMNS order

    Raises:
        ConfigError: If the sweep ranges are invalid
    """
    sweep = validate_config(config)
    tasks = _tasks(config, sweep)
    workers = workers or get_settings().sweep_workers
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        rows = list(pool.map(lambda task: task(), tasks))
    return pd.DataFrame(rows, columns=list(EXPERIMENT_COLUMNS[config.experiment]))


def run_experiment(
    config: ExperimentConfig,
    settings: Optional[Settings] = None,
    stream: Optional[TextIO] = None,
) -> pd.DataFrame:
    """Run an experiment and write its table to config.output (stdout if unset).

    Raises:
        ConfigError: If the sweep ranges are invalid
        OutputError: If the table cannot be written
    """
    settings = settings or get_settings()
    target = config.output or "stdout"
    logger.info(
        f"Running {config.experiment.value} (output={target}, format={config.format.value})"
    )
    frame = build_table(config, workers=settings.sweep_workers)
    write_table(
        frame,
        output=config.output,
        fmt=config.format,
        significant_digits=settings.csv_significant_digits,
        stream=stream,
    )
    logger.info(f"Finished {config.experiment.value}: {len(frame)} rows")
    return frame


def analyze(
    params: MarketParams,
    spec: LevelSpec,
    tau: Optional[float] = None,
    k_max: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> AnalysisReport:
    """One-shot report for a single market instance.

    The stochastic strategy assumes a truncated Poisson(tau) level on
    0..k_max; both default to settings.

    Raises:
        ZeroWelfareError: If the level-k performance is zero
    """
    settings = settings or get_settings()
    tau = settings.default_tau if tau is None else tau
    k_max = settings.default_k_max if k_max is None else k_max
    dist = RationalityDistribution.truncated_poisson(tau, k_max)

    profile = level_k_profile(spec, params)
    return AnalysisReport(
        a=params.a,
        b=params.b,
        c=params.c,
        m=params.m,
        f=params.f,
        beta=params.beta,
        k=spec.k,
        delta=spec.delta,
        q_s=profile.q_s,
        q_b=profile.q_b,
        total=profile.total,
        price=price(profile, params),
        profit_self=profit_self(profile, params),
        consumer_surplus=consumer_surplus(profile, params),
        welfare=welfare(profile, params),
        welfare_ne=equilibrium_performance(params),
        distance=welfare_distance(profile, params),
        por=price_of_rationality(spec, params),
        tau=tau,
        k_max=k_max,
        q_b_optimal=optimal_strategy(spec.k, params),
        q_b_stochastic=stochastic_strategy(dist, params),
        q_b_robust=robust_strategy(params),
        gamma_star=optimal_cooperation_level(spec.k, params).gamma if spec.k >= 1 else None,
    )
