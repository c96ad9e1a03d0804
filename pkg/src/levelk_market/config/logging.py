"""Root logger setup shared by the CLI and the HTTP service."""

import logging

from pythonjsonlogger import jsonlogger

from levelk_market.config.settings import Settings

TEXT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
JSON_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def configure_logging(settings: Settings) -> None:
    """Install a single root handler according to settings.

    Args:
        settings: Application settings (log_level, log_format)
    """
    handler = logging.StreamHandler()
    if settings.log_format.lower() == "json":
        handler.setFormatter(jsonlogger.JsonFormatter(JSON_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))

    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(settings.log_level.upper())
