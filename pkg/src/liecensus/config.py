"""Run configuration and enumeration caps."""
from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_ORDER = "LIE_CENSUS_MAX_ORDER"
DEFAULT_MAX_ORDER = 2_000_000
SOFT_WARN_ORDER = 100_000
DEFAULT_MAX_LABELS = 1_000_000
DEFAULT_SERIES_N = 12
FORMATS = ("json", "csv", "pretty")


def max_order_from_env(default: int = DEFAULT_MAX_ORDER) -> int:
    raw = os.environ.get(ENV_MAX_ORDER)
    if raw is None or raw == "":
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{ENV_MAX_ORDER} must be positive, got {raw}")
    return value


@dataclass
class RunConfig:
    max_order: int = DEFAULT_MAX_ORDER
    max_labels: int = DEFAULT_MAX_LABELS
    series_n: int = DEFAULT_SERIES_N
    fmt: str = "json"

    def __post_init__(self):
        if self.max_order <= 0 or self.max_labels <= 0:
            raise ValueError("caps must be positive")
        if self.series_n < 0:
            raise ValueError("series truncation must be >= 0")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
