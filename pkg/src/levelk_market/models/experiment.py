"""Experiment configuration and report models for levelk-market.

ExperimentConfig is the validated form of a KEY=VALUE config file plus
command-line overrides. AnalysisReport is the one-shot summary of a single
market instance.
"""

import json
from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from levelk_market.models.market import Delta, MarketParams, parse_delta


class ExperimentKind(str, Enum):
    """Numerical studies the harness can reproduce."""

    PRODUCTION_VS_F = "production_vs_f"
    POR_VS_F = "por_vs_f"
    WELFARE_VS_DELTA = "welfare_vs_delta"
    FIXED_SUM_LEVELS = "fixed_sum_levels"
    POR_REGION = "por_region"
    VALUE_OF_INFORMATION = "value_of_information"
    OPTIMAL_GAMMA = "optimal_gamma"
    POR_WITH_DESIGN = "por_with_design"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def split_list(value: Any) -> Any:
    """Accept JSON arrays or comma-separated text for list-valued keys."""
    if not isinstance(value, str):
        return value
    text = value.strip()
    if not text:
        return []
    try:
        parsed = json.loads(text)
    except json.JSONDecodeError:
        parsed = [item.strip() for item in text.strip("[]").split(",") if item.strip()]
    return parsed if isinstance(parsed, list) else [parsed]


class ExperimentConfig(BaseModel):
    """One experiment run: market constants, sweep ranges and output target.

    Sweeps that are not used by the selected experiment are ignored.
    """

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    experiment: ExperimentKind = Field(..., description="Study to run")

    # Market constants
    a: float = Field(1.0, description="Demand slope")
    b: float = Field(1.0, description="Demand intercept")
    c: float = Field(0.25, description="Marginal cost")
    m: float = Field(0.0, description="Utility constant")

    # Capacity sweep: explicit values win over the uniform grid
    f_values: List[float] = Field(default_factory=list, description="Explicit capacities")
    f_min: float = Field(0.05, description="Lowest capacity of the uniform grid")
    f_max: Optional[float] = Field(None, description="Highest capacity, defaults to (b-c)/a")
    f_points: int = Field(15, description="Number of capacities in the uniform grid")

    # Level sweeps
    k_values: List[int] = Field(default_factory=lambda: [1], description="Levels of firm S")
    deltas: List[Delta] = Field(
        default_factory=lambda: [-1, 0, 1, 2, "inf"], description="Relative planner levels"
    )
    delta_max: int = Field(6, description="Largest delta of the welfare_vs_delta sweep")
    level_sum: int = Field(7, description="k + (k + delta) for fixed_sum_levels")

    # Rationality distribution and realized levels for value_of_information
    tau: float = Field(1.5, description="Poisson mean of the level distribution")
    k_max: int = Field(20, description="Truncation level of the Poisson distribution")
    realized_levels: List[int] = Field(
        default_factory=lambda: [1, 2, 3], description="Realized levels K"
    )

    # Output
    output: Optional[str] = Field(None, description="Output path, stdout when unset")
    format: OutputFormat = Field(OutputFormat.CSV, description="Table format")

    @field_validator("f_values", "k_values", "realized_levels", mode="before")
    @classmethod
    def _parse_list(cls, value: Any) -> Any:
        return split_list(value)

    @field_validator("deltas", mode="before")
    @classmethod
    def _parse_deltas(cls, value: Any) -> Any:
        return [parse_delta(item) for item in split_list(value)]

    @field_validator("experiment", "format", mode="before")
    @classmethod
    def _lower(cls, value: Any) -> Any:
        return value.strip().lower() if isinstance(value, str) else value

    @field_validator("output", mode="before")
    @classmethod
    def _blank_output(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip() in ("", "-"):
            return None
        return value


class AnalysisReport(BaseModel):
    """Everything the simulator knows about one (market, levels) instance."""

    a: float
    b: float
    c: float
    m: float
    f: float
    beta: float = Field(..., description="Normalized capacity f*a/(b-c)")
    k: int
    delta: Delta

    q_s: float = Field(..., description="Level-k quantity of firm S")
    q_b: float = Field(..., description="Level-(k+delta) quantity of firm B")
    total: float
    price: float
    profit_self: float
    consumer_surplus: float
    welfare: float
    welfare_ne: float = Field(..., description="Welfare at the Nash equilibrium")
    distance: float = Field(..., description="|(b-c)/a - q_s - q_b|")
    por: float = Field(..., description="Price of rationality")

    tau: float
    k_max: int
    q_b_optimal: float = Field(..., description="Planner quantity under complete information")
    q_b_stochastic: float = Field(..., description="Expected-welfare maximizer")
    q_b_robust: float = Field(..., description="Maximin planner quantity")
    gamma_star: Optional[float] = Field(None, description="Optimal cooperation level (k >= 1)")


class AnalyzeRequest(BaseModel):
    """Body of POST /markets/analyze."""

    params: MarketParams = Field(default_factory=MarketParams)
    k: int = Field(1, ge=0)
    delta: Delta = Field(1)
    tau: Optional[float] = Field(None, gt=0, description="Defaults to settings.default_tau")
    k_max: Optional[int] = Field(None, ge=0, description="Defaults to settings.default_k_max")

    @field_validator("delta", mode="before")
    @classmethod
    def _normalize_delta(cls, value: Any) -> Any:
        return parse_delta(value)


class ExperimentResponse(BaseModel):
    """Table returned by POST /experiments."""

    experiment: ExperimentKind
    columns: List[str]
    rows: List[dict]
