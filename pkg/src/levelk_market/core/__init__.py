"""Numerical core of levelk-market."""

from levelk_market.exceptions import (
    ConfigError,
    InvalidInputError,
    MarketSimError,
    OutputError,
    ZeroWelfareError,
)
from levelk_market.core.best_response import br_planner, br_planner_gamma, br_self
from levelk_market.core.experiments import (
    EXPERIMENT_COLUMNS,
    analyze,
    build_table,
    run_experiment,
    validate_config,
)
from levelk_market.core.level_k import (
    level0,
    level_k_closed,
    level_k_gamma,
    level_k_gamma_iterative,
    level_k_iterative,
    level_k_profile,
    nash_equilibrium,
    nash_limit,
)
from levelk_market.core.market_model import (
    consumer_surplus,
    consumer_utility,
    designed_utility,
    inverse_demand,
    optimal_total,
    price,
    profit_planner,
    profit_self,
    welfare,
    welfare_at_total,
    welfare_distance,
    welfare_from_distance,
)
from levelk_market.core.planner_strategies import (
    evii,
    expected_self_quantity,
    expected_welfare,
    optimal_strategy,
    robust_strategy,
    stochastic_strategy,
    vci,
)
from levelk_market.core.utility_design import (
    equal_level_profile,
    equal_level_total,
    equal_level_welfare,
    has_multiple_optima,
    optimal_cooperation_level,
    optimal_total_even,
    por_with_design,
)
from levelk_market.core.welfare_analysis import (
    equilibrium_performance,
    level_k_performance,
    level_k_total,
    por_lt_one_region,
    price_of_rationality,
    total_production_breakpoints,
)

__all__ = [
    "ConfigError",
    "InvalidInputError",
    "MarketSimError",
    "OutputError",
    "ZeroWelfareError",
    "EXPERIMENT_COLUMNS",
    "analyze",
    "br_planner",
    "br_planner_gamma",
    "br_self",
    "build_table",
    "consumer_surplus",
    "consumer_utility",
    "designed_utility",
    "equal_level_profile",
    "equal_level_total",
    "equal_level_welfare",
    "equilibrium_performance",
    "evii",
    "expected_self_quantity",
    "expected_welfare",
    "has_multiple_optima",
    "inverse_demand",
    "level0",
    "level_k_closed",
    "level_k_gamma",
    "level_k_gamma_iterative",
    "level_k_iterative",
    "level_k_performance",
    "level_k_profile",
    "level_k_total",
    "nash_equilibrium",
    "nash_limit",
    "optimal_cooperation_level",
    "optimal_strategy",
    "optimal_total",
    "optimal_total_even",
    "por_lt_one_region",
    "por_with_design",
    "price",
    "price_of_rationality",
    "profit_planner",
    "profit_self",
    "robust_strategy",
    "run_experiment",
    "stochastic_strategy",
    "total_production_breakpoints",
    "validate_config",
    "vci",
    "welfare",
    "welfare_at_total",
    "welfare_distance",
    "welfare_from_distance",
]
