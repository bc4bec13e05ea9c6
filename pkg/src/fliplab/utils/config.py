"""
Run settings: enumeration caps, the random seed, how many seeded random sets the
verify suites draw per size, and the log level.

Settings are resolved in three layers: built-in defaults, then an optional YAML file,
then the environment. FLIPLAB_CONFIG names a YAML file used when none is passed;
FLIPLAB_CAP overrides every cap at once.

Example fliplab.yaml:

    edge_flip_cap: 10
    bistellar_cap: 8
    seed: 42
    random_sets_per_size: 5
    log_level: DEBUG
"""

from dataclasses import dataclass, fields, replace
from os import environ
from pathlib import Path
from typing import Optional, Union

import yaml
from loguru import logger

from ..errors import InvalidFormatError

CAP_FIELDS = ("edge_flip_cap", "bistellar_cap", "poset_cap", "chain_cap", "simflip_cap")


@dataclass(frozen=True)
class Settings:
    edge_flip_cap: int = 10
    bistellar_cap: int = 8
    poset_cap: int = 8
    chain_cap: int = 8
    simflip_cap: int = 10
    seed: int = 0
    random_sets_per_size: int = 50
    log_level: str = "INFO"

    def with_cap(self, cap: Optional[int]) -> "Settings":
        """The same settings with every cap replaced (no-op for None)."""
        if cap is None:
            return self
        return replace(self, **{name: int(cap) for name in CAP_FIELDS})


def _read_yaml(path: Union[str, Path]) -> dict:
    try:
        with open(path, "r") as f:
            config = yaml.safe_load(f) or {}
    except OSError as e:
        logger.error(f"cannot read config file '{path}': {e}")
        raise InvalidFormatError(f"cannot read config file '{path}'") from e
    except yaml.YAMLError as e:
        logger.error(f"config file '{path}' is not valid YAML: {e}")
        raise InvalidFormatError(f"config file '{path}' is not valid YAML") from e
    if not isinstance(config, dict):
        raise InvalidFormatError(f"config file '{path}' must hold a mapping")
    return config


def load_settings(config_file: Optional[Union[str, Path]] = None) -> Settings:
    settings = Settings()
    config_file = config_file or environ.get("FLIPLAB_CONFIG")
    if config_file:
        known = {f.name for f in fields(Settings)}
        values = {}
        for key, value in _read_yaml(config_file).items():
            if key not in known:
                logger.warning(f"ignoring unknown config key '{key}' in {config_file}")
                continue
            if key == "log_level":
                values[key] = str(value)
                continue
            try:
                values[key] = int(value)
            except (TypeError, ValueError) as e:
                logger.error(f"config key '{key}' must be an integer, got {value!r}")
                raise InvalidFormatError(f"{key}={value!r} in {config_file}") from e
        settings = replace(settings, **values)
        logger.debug(f"settings loaded from {config_file}")

    cap = environ.get("FLIPLAB_CAP")
    if cap:
        try:
            settings = settings.with_cap(int(cap))
        except ValueError as e:
            logger.error(f"FLIPLAB_CAP must be an integer, got {cap!r}")
            raise InvalidFormatError(f"FLIPLAB_CAP={cap!r}") from e
    return settings


__all__ = ["CAP_FIELDS", "Settings", "load_settings"]
