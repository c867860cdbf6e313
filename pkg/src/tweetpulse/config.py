"""Application configuration: one YAML file plus environment overrides."""
from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, fields, replace
from datetime import date
from pathlib import Path

import yaml

from .mobility import DEFAULT_LAG_WEEKS, DEFAULT_WEEK_EPOCH

ENV_PREFIX = "TWEETPULSE_"


class ConfigError(ValueError):
    """Raised for unreadable or ill-typed configuration."""


@dataclass(frozen=True)
class AppConfig:
    """Knobs for the CLI, batch reports, and the HTTP service."""

    data_dir: Path = Path("data")
    host: str = "127.0.0.1"
    port: int = 8000
    # Origin allowed to call the API from a browser; * for development.
    dashboard_origin: str = "*"
    # Lexicon/watchlist overrides; None means the packaged defaults.
    valence_lexicon: Path | None = None
    subjectivity_lexicon: Path | None = None
    featured_topics: Path | None = None
    stopwords: Path | None = None
    extra_stopwords: Path | None = None
    # Optional external weekly case counts (state,week_start,cases).
    cases_csv: Path | None = None
    lag_weeks: int = DEFAULT_LAG_WEEKS
    week_epoch: date = DEFAULT_WEEK_EPOCH
    # Reference date for "today"/"yesterday"; None falls back to the
    # newest corpus day, so historical corpora stay queryable.
    clock_date: date | None = None
    # Topic modeling is opt-in: fitting runs at snapshot build time.
    lda_enabled: bool = False
    lda_topics: int = 25
    lda_iterations: int = 200
    lda_seed: int = 0
    lda_alpha: float | None = None
    lda_beta: float = 0.01
    lda_min_df: int = 2
    lda_max_df_fraction: float = 0.95


_PATH_FIELDS = {
    "data_dir",
    "valence_lexicon",
    "subjectivity_lexicon",
    "featured_topics",
    "stopwords",
    "extra_stopwords",
    "cases_csv",
}
_DATE_FIELDS = {"week_epoch", "clock_date"}
_INT_FIELDS = {"port", "lag_weeks", "lda_topics", "lda_iterations", "lda_seed", "lda_min_df"}
_FLOAT_FIELDS = {"lda_alpha", "lda_beta", "lda_max_df_fraction"}
_BOOL_FIELDS = {"lda_enabled"}


def _coerce(name: str, value):
    if value is None:
        return None
    try:
        if name in _PATH_FIELDS:
            return Path(value)
        if name in _DATE_FIELDS:
            return value if isinstance(value, date) else date.fromisoformat(str(value))
        if name in _INT_FIELDS:
            return int(value)
        if name in _FLOAT_FIELDS:
            return float(value)
        if name in _BOOL_FIELDS:
            if isinstance(value, bool):
                return value
            text = str(value).strip().lower()
            if text in ("1", "true", "yes", "on"):
                return True
            if text in ("0", "false", "no", "off"):
                return False
            raise ValueError(f"not a boolean: {value!r}")
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad value for {name}: {value!r} ({exc})") from None
    return value


def load_config(
    path: str | Path | None = None,
    env: Mapping[str, str] | None = None,
) -> AppConfig:
    """Build the config from defaults, then the YAML file, then env vars.

    Environment variables use the field name upper-cased with the
    TWEETPULSE_ prefix, e.g. TWEETPULSE_PORT or TWEETPULSE_DATA_DIR.
    """
    env = os.environ if env is None else env
    known = {f.name for f in fields(AppConfig)}
    settings: dict[str, object] = {}

    if path is not None:
        try:
            raw = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from None
        except yaml.YAMLError as exc:
            raise ConfigError(f"invalid YAML in {path}: {exc}") from None
        if raw is None:
            raw = {}
        if not isinstance(raw, dict):
            raise ConfigError(f"config root must be a mapping, got {type(raw).__name__}")
        for key, value in raw.items():
            if key not in known:
                raise ConfigError(f"unknown config key: {key}")
            settings[key] = _coerce(key, value)

    for name in known:
        env_key = ENV_PREFIX + name.upper()
        if env_key in env:
            settings[name] = _coerce(name, env[env_key])

    return replace(AppConfig(), **settings)
