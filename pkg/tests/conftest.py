"""Pytest configuration and fixtures for levelk-market tests.

Provides shared fixtures for unit, integration and contract tests.
The reference market is a = b = 1, c = 0.25, m = 0, so (b - c)/a = 0.75.
"""

import asyncio
from typing import Callable, Generator, List

import numpy as np
import pytest

from levelk_market.models import MarketParams

SPAN = 0.75


@pytest.fixture(scope="session")
def event_loop() -> Generator:
    """Create an instance of the default event loop for the test session."""
    loop = asyncio.get_event_loop_policy().new_event_loop()
    yield loop
    loop.close()


@pytest.fixture
def params() -> MarketParams:
    """Reference market with f = 0.5 (beta = 2/3)"""
    return MarketParams(a=1.0, b=1.0, c=0.25, m=0.0, f=0.5)


@pytest.fixture
def market() -> Callable[[float], MarketParams]:
    """Factory for the reference market at a given capacity"""

    def _make(f: float) -> MarketParams:
        return MarketParams(a=1.0, b=1.0, c=0.25, m=0.0, f=f)

    return _make


@pytest.fixture
def beta_markets() -> List[MarketParams]:
    """Reference market at beta = 0.05, 0.10, ..., 1.0"""
    betas = np.linspace(0.05, 1.0, 20)
    return [MarketParams(a=1.0, b=1.0, c=0.25, m=0.0, f=float(beta) * SPAN) for beta in betas]
