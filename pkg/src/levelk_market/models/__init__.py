"""Data models for levelk-market."""

from levelk_market.models.experiment import (
    AnalysisReport,
    AnalyzeRequest,
    ExperimentConfig,
    ExperimentKind,
    ExperimentResponse,
    OutputFormat,
)
from levelk_market.models.market import (
    INF,
    MAX_LEVEL,
    CooperationLevel,
    Delta,
    Firm,
    GridSpec,
    LevelSpec,
    LinearSegment,
    MarketParams,
    PorRegion,
    ProductionBreakpoints,
    RationalityDistribution,
    StrategyProfile,
    format_delta,
    parse_delta,
)

__all__ = [
    "INF",
    "MAX_LEVEL",
    "AnalysisReport",
    "AnalyzeRequest",
    "CooperationLevel",
    "Delta",
    "ExperimentConfig",
    "ExperimentKind",
    "ExperimentResponse",
    "Firm",
    "GridSpec",
    "LevelSpec",
    "LinearSegment",
    "MarketParams",
    "OutputFormat",
    "PorRegion",
    "ProductionBreakpoints",
    "RationalityDistribution",
    "StrategyProfile",
    "format_delta",
    "parse_delta",
]
