"""Market data models for levelk-market.

This module defines the immutable value types shared by every numerical
module: market constants, strategy profiles, rationality levels and the
planner's cooperation level.
"""

import math
from enum import Enum
from typing import Any, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.special import logsumexp
from scipy.stats import poisson

INF: Literal["inf"] = "inf"
MAX_LEVEL = 1024

Delta = Union[int, Literal["inf"]]


def parse_delta(value: Any) -> Any:
    """Normalize the spellings of an unbounded relative level to ``INF``."""
    if isinstance(value, float) and math.isinf(value) and value > 0:
        return INF
    if isinstance(value, str) and value.strip().lower() in ("inf", "+inf", "infinity", "∞"):
        return INF
    return value


def format_delta(delta: Delta) -> str:
    """Render a relative level the way config files and tables spell it."""
    return INF if delta == INF else str(delta)


class Firm(str, Enum):
    """The two suppliers of the market."""

    SELF_INTERESTED = "S"
    PLANNER = "B"


class MarketParams(BaseModel):
    """Demand, cost and network constants of one market instance.

    Inverse demand is p(q) = b - a*q, consumer utility u(q) = -a/2 q^2 + b q + m,
    both suppliers produce at marginal cost c and the planner's output is
    limited by the flow capacity f of the congested line.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    a: float = Field(1.0, gt=0, description="Demand slope (price per unit squared)")
    b: float = Field(1.0, gt=0, description="Demand intercept (price)")
    c: float = Field(0.25, ge=0, description="Marginal production cost (price per unit)")
    m: float = Field(0.0, ge=0, description="Utility constant (welfare units)")
    f: float = Field(0.5, gt=0, description="Flow capacity of the congested line (quantity)")

    @model_validator(mode="after")
    def _check_market(self) -> "MarketParams":
        if self.c >= self.b:
            raise ValueError(f"marginal cost c={self.c} must be below the intercept b={self.b}")
        if self.f > self.span:
            raise ValueError(
                f"flow capacity f={self.f} exceeds the efficient quantity (b-c)/a={self.span}"
            )
        return self

    @property
    def span(self) -> float:
        """Optimal social total production (b - c)/a."""
        return (self.b - self.c) / self.a

    @property
    def half_span(self) -> float:
        """Monopoly quantity (b - c)/(2a)."""
        return self.span / 2.0

    @property
    def beta(self) -> float:
        """Normalized capacity f*a/(b - c), in (0, 1]."""
        return self.f / self.span

    @property
    def optimal_welfare(self) -> float:
        """Welfare at zero distance, (b - c)^2/(2a) + m."""
        return (self.b - self.c) ** 2 / (2.0 * self.a) + self.m

    def with_capacity(self, f: float) -> "MarketParams":
        """Return a validated copy with a different flow capacity."""
        return MarketParams(a=self.a, b=self.b, c=self.c, m=self.m, f=f)


class StrategyProfile(BaseModel):
    """Production quantities of both firms; demand is always q_s + q_b."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    q_s: float = Field(..., ge=0, description="Quantity of the self-interested firm S")
    q_b: float = Field(..., ge=0, description="Quantity of the planner B")

    @property
    def total(self) -> float:
        """Market-clearing demand q_D."""
        return self.q_s + self.q_b


class LevelSpec(BaseModel):
    """Rationality levels: k for firm S and k + delta for firm B.

    ``delta == INF`` puts the planner at its Nash equilibrium quantity.
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=0, le=MAX_LEVEL, description="Level of the self-interested firm")
    delta: Delta = Field(0, description="Relative level of the planner, or 'inf'")

    @field_validator("delta", mode="before")
    @classmethod
    def _normalize_delta(cls, value: Any) -> Any:
        return parse_delta(value)

    @model_validator(mode="after")
    def _check_delta(self) -> "LevelSpec":
        if self.delta != INF and self.delta < -self.k:
            raise ValueError(f"delta={self.delta} puts the planner below level 0 (k={self.k})")
        return self

    @property
    def planner_level(self) -> Optional[int]:
        """Level of firm B, or None when it plays the equilibrium quantity."""
        return None if self.delta == INF else self.k + self.delta


class CooperationLevel(BaseModel):
    """Weight gamma on firm S's profit in the planner's designed utility."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    gamma: float = Field(0.0, description="Cooperation (gamma > 0) or fight (gamma < 0)")


class PorRegion(BaseModel):
    """Open interval of normalized capacities beta on which PoR < 1."""

    model_config = ConfigDict(frozen=True)

    lower: float = Field(0.0, description="Lower beta threshold (exclusive)")
    upper: float = Field(1.0, description="Upper beta threshold (exclusive)")
    empty: bool = False

    @model_validator(mode="after")
    def _check_bounds(self) -> "PorRegion":
        if not self.empty and not (0.0 <= self.lower < self.upper <= 1.0):
            raise ValueError(f"invalid region ({self.lower}, {self.upper})")
        return self

    def contains(self, beta: float) -> bool:
        return not self.empty and self.lower < beta < self.upper


class LinearSegment(BaseModel):
    """Affine function intercept + slope * beta (quantity units)."""

    model_config = ConfigDict(frozen=True)

    intercept: float
    slope: float

    def value(self, beta: float) -> float:
        return self.intercept + self.slope * beta


class ProductionBreakpoints(BaseModel):
    """Piecewise-linear total production q_S^(k) + q_B^(k+delta) as a function of beta.

    Segment z applies up to ``t_zy``, segment y between the thresholds and
    segment x from ``t_xy`` on.
    """

    model_config = ConfigDict(frozen=True)

    t_zy: float
    t_xy: float
    z: LinearSegment
    y: LinearSegment
    x: LinearSegment

    def total(self, beta: float) -> float:
        if beta <= self.t_zy:
            return self.z.value(beta)
        if beta <= self.t_xy:
            return self.y.value(beta)
        return self.x.value(beta)


class RationalityDistribution(BaseModel):
    """Probability mass over the level K of the self-interested firm."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    levels: Tuple[int, ...]
    probabilities: Tuple[float, ...]

    @model_validator(mode="after")
    def _check_masses(self) -> "RationalityDistribution":
        if not self.levels:
            raise ValueError("distribution needs at least one level")
        if len(self.levels) != len(self.probabilities):
            raise ValueError("levels and probabilities must have the same length")
        if any(k < 0 for k in self.levels):
            raise ValueError("levels must be non-negative")
        if any(b <= a for a, b in zip(self.levels, self.levels[1:])):
            raise ValueError("levels must be distinct and sorted")
        if any(p < 0 for p in self.probabilities):
            raise ValueError("probabilities must be non-negative")
        if abs(math.fsum(self.probabilities) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {math.fsum(self.probabilities)}, not 1")
        return self

    @classmethod
    def from_weights(cls, weights: dict) -> "RationalityDistribution":
        """Normalize non-negative weights keyed by level."""
        levels = sorted(int(k) for k in weights)
        raw = np.array([float(weights[k]) for k in levels])
        if raw.sum() <= 0:
            raise ValueError("weights must have a positive sum")
        probs = raw / raw.sum()
        return cls(levels=tuple(levels), probabilities=tuple(float(p) for p in probs))

    @classmethod
    def degenerate(cls, k: int) -> "RationalityDistribution":
        return cls(levels=(k,), probabilities=(1.0,))

    @classmethod
    def truncated_poisson(cls, tau: float, k_max: int = 20) -> "RationalityDistribution":
        """Poisson(tau) masses on 0..k_max, renormalized to sum to one."""
        if tau <= 0:
            raise ValueError(f"tau must be positive, got {tau}")
        if k_max < 0:
            raise ValueError(f"k_max must be non-negative, got {k_max}")
        levels = np.arange(k_max + 1)
        log_pmf = poisson.logpmf(levels, tau)
        pmf = np.exp(log_pmf - logsumexp(log_pmf))
        return cls(
            levels=tuple(int(k) for k in levels),
            probabilities=tuple(float(p) for p in pmf),
        )

    def expectation(self, values) -> float:
        """Expectation of per-level values (a callable of k or a sequence)."""
        if callable(values):
            values = [values(k) for k in self.levels]
        return float(np.dot(self.probabilities, np.asarray(values, dtype=float)))


class GridSpec(BaseModel):
    """Uniform grid lo + i*(hi - lo)/(n - 1), i = 0..n-1."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    lo: float
    hi: float
    n: int = Field(..., ge=2)

    @model_validator(mode="after")
    def _check_order(self) -> "GridSpec":
        if not self.lo < self.hi:
            raise ValueError(f"grid needs lo < hi, got [{self.lo}, {self.hi}]")
        return self

    def points(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.n)
