"""Run-wide limits and switches."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_CAP = 10**6


def default_cap() -> int:
    """Enumeration cap, overridable through ``PSTRICT_CAP``."""
    raw = os.environ.get("PSTRICT_CAP")
    if raw is None or raw == "":
        return DEFAULT_CAP
    return int(raw)


@dataclass(frozen=True)
class RunConfig:
    cap: int = DEFAULT_CAP
    jobs: int = 1
    timestamps: bool = True

    @classmethod
    def from_env(cls, jobs: int = 1, timestamps: bool = True) -> "RunConfig":
        return cls(cap=default_cap(), jobs=jobs, timestamps=timestamps)
