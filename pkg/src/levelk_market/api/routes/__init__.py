"""API routes module."""

from levelk_market.api.routes.markets import router as markets_router

__all__ = ["markets_router"]
