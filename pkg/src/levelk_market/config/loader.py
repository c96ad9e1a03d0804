"""Experiment configuration loading.

A config file is plain KEY=VALUE text (read with python-dotenv). Command-line
overrides win over file values; Settings supply the market defaults.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from dotenv import dotenv_values
from pydantic import ValidationError

from levelk_market.config.settings import Settings, get_settings
from levelk_market.exceptions import ConfigError
from levelk_market.models import ExperimentConfig

logger = logging.getLogger(__name__)


def settings_defaults(settings: Settings) -> Dict[str, Any]:
    return {
        "a": settings.default_a,
        "b": settings.default_b,
        "c": settings.default_c,
        "m": settings.default_m,
        "tau": settings.default_tau,
        "k_max": settings.default_k_max,
    }


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Read KEY=VALUE pairs, keys lower-cased.

    Raises:
        ConfigError: If the file does not exist
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file {path} not found", fields=("config",))
    values = dotenv_values(path)
    return {key.strip().lower(): value for key, value in values.items() if value is not None}


def load_experiment_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    settings: Optional[Settings] = None,
) -> ExperimentConfig:
    """Build a validated ExperimentConfig.

    Args:
        path: Optional KEY=VALUE config file
        overrides: Values from command-line flags (None entries are ignored)
        settings: Application settings for market defaults

    Returns:
        ExperimentConfig: Validated configuration

    Raises:
        ConfigError: Naming every field that failed validation
    """
    settings = settings or get_settings()
    merged: Dict[str, Any] = settings_defaults(settings)
    if path is not None:
        merged.update(read_config_file(path))
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        config = ExperimentConfig(**merged)
    except ValidationError as e:
        fields = sorted({str(err["loc"][0]) for err in e.errors() if err["loc"]})
        logger.warning(f"Rejected experiment config: {e.error_count()} error(s) in {fields}")
        raise ConfigError(f"invalid experiment config: {e}", fields=fields) from e

    logger.debug(f"Loaded experiment config: {config.model_dump(exclude_unset=True)}")
    return config
