"""Metric constants. Every report echoes the config it was computed with."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path

ENV_VAR = "WIDGETFORGE_CONFIG"


@dataclass(frozen=True)
class MetricConfig:
    s_margin: float = 1.0
    s_content: float = 0.5
    s_area: float = 0.1
    s_contrast: float = 5.0
    s_loccon: float = 5.0
    alpha: float = 0.15
    beta: float = 0.15
    gamma: float = 2.0
    hue_bins: int = 36
    sat_bins: int = 32
    tiny_region: float = 0.0005  # fraction of image area
    one_sided_text_penalty: float = 0.0
    s_geo: float = 0.2

    def __post_init__(self):
        for name in ("s_margin", "s_content", "s_area", "s_contrast", "s_loccon", "alpha", "beta", "gamma", "s_geo"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if self.hue_bins < 2 or self.sat_bins < 2:
            raise ValueError("histogram bins must be >= 2")
        if not 0 <= self.tiny_region < 1:
            raise ValueError("tiny_region must lie in [0, 1)")
        if not 0 <= self.one_sided_text_penalty <= 100:
            raise ValueError("one_sided_text_penalty must lie in [0, 100]")

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "MetricConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown metric config keys: {unknown}")
        return cls(**data)

    @classmethod
    def load(cls, path: str | os.PathLike | None = None) -> "MetricConfig":
        """Explicit path, else $WIDGETFORGE_CONFIG, else defaults."""
        path = path or os.environ.get(ENV_VAR)
        if not path:
            return cls()
        data = json.loads(Path(path).read_text("utf-8"))
        # a shared config file may nest metric settings
        return cls.from_dict(data.get("metrics", data))
