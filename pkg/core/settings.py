import logging
import os
from dataclasses import dataclass
from typing import Any, Dict

import yaml

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SETTINGS_PATH = os.path.join(PROJECT_ROOT, "config", "settings.yaml")
FIXTURES_DIR = os.path.join(PROJECT_ROOT, "data", "fixtures")
REPORTS_DIR = os.path.join(PROJECT_ROOT, "data", "reports")

DEFAULT_SETTINGS: Dict[str, Any] = {
    "limits": {
        "max_radius": 6,
        "max_memory": 8,
        "dp_bound": 1_000_000,
        "max_depth": 16,
        "max_extension": 32,
        "report_limit": 50,
    },
    "analysis": {"default_depth": 8, "image_depth": 1},
    "compression": {"marker_length": 1},
    "logging": {"level": "INFO", "format": "%(asctime)s [%(levelname)s] %(message)s"},
}

# env var -> key under "limits"
ENV_OVERRIDES = {
    "ZDYN_MAX_RADIUS": "max_radius",
    "ZDYN_MAX_MEMORY": "max_memory",
    "ZDYN_DP_BOUND": "dp_bound",
    "ZDYN_MAX_DEPTH": "max_depth",
    "ZDYN_MAX_EXTENSION": "max_extension",
    "ZDYN_REPORT_LIMIT": "report_limit",
}


def load_settings(path: str = SETTINGS_PATH) -> Dict[str, Any]:
    settings = {section: dict(values) for section, values in DEFAULT_SETTINGS.items()}
    if not os.path.exists(path):
        logging.warning("Settings file %s not found, using built-in defaults.", path)
        return settings

    with open(path, "r") as f:
        loaded = yaml.safe_load(f) or {}

    for section, values in loaded.items():
        if isinstance(values, dict):
            settings.setdefault(section, {}).update(values)
        else:
            settings[section] = values
    return settings


@dataclass(frozen=True)
class Limits:
    """Enumeration caps shared by every module."""

    max_radius: int = 6
    max_memory: int = 8
    dp_bound: int = 1_000_000
    max_depth: int = 16
    max_extension: int = 32
    report_limit: int = 50


def get_limits(settings: Dict[str, Any] | None = None) -> Limits:
    settings = settings if settings is not None else load_settings()
    values = dict(settings.get("limits", {}))
    for env_name, key in ENV_OVERRIDES.items():
        raw = os.getenv(env_name)
        if raw is None or raw == "":
            continue
        try:
            values[key] = int(raw)
        except ValueError:
            raise ValueError(f"{env_name} must be an integer, got {raw!r}")

    known = {k: int(v) for k, v in values.items() if k in Limits.__dataclass_fields__}
    limits = Limits(**known)
    for key, value in known.items():
        if value < 1:
            raise ValueError(f"limits.{key} must be positive, got {value}")
    return limits


def analysis_setting(key: str, settings: Dict[str, Any] | None = None) -> Any:
    settings = settings if settings is not None else load_settings()
    return settings.get("analysis", {}).get(key, DEFAULT_SETTINGS["analysis"][key])


def compression_setting(key: str, settings: Dict[str, Any] | None = None) -> Any:
    settings = settings if settings is not None else load_settings()
    return settings.get("compression", {}).get(key, DEFAULT_SETTINGS["compression"][key])
