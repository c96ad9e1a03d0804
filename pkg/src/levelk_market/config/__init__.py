"""Configuration module."""

from levelk_market.config.logging import configure_logging
from levelk_market.config.settings import Settings, get_settings

__all__ = ["Settings", "get_settings", "configure_logging"]
