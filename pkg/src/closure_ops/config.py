"""Run configuration shared by the CLI and the experiment scripts."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .ideals import UsageError, Window

SUITES = ("axioms", "tables", "act", "enumeration", "prime-scan", "exceptional")
FORMATS = ("human", "structured")

# desk-scale defaults: each suite finishes in seconds
DEFAULT_MAX = {"dvr": 8, "ded": 4, "cusp": 6}

WORKERS_ENV = "CLOSURE_OPS_WORKERS"


@dataclass(frozen=True)
class SuiteConfig:
    ring: str
    max_deg: Optional[int] = None
    p: int = 2
    primes: int = 2
    suites: tuple = ("all",)
    fmt: str = "human"
    output: Optional[str] = None
    mode: str = "corrected"  # composition-table reading, see tables.MODES

    def __post_init__(self):
        if self.ring not in DEFAULT_MAX:
            raise UsageError(f"unknown ring {self.ring!r}")
        for s in self.suites:
            if s != "all" and s not in SUITES:
                raise UsageError(f"unknown suite {s!r}")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")

    @property
    def window(self) -> Window:
        D = DEFAULT_MAX[self.ring] if self.max_deg is None else self.max_deg
        return Window(self.ring, D, self.p, self.primes)

    def selected(self) -> list:
        if "all" in self.suites:
            return list(SUITES)
        return [s for s in SUITES if s in self.suites]

    def as_dict(self) -> dict:
        w = self.window
        out = {"ring": self.ring, "max": w.max_deg}
        if self.ring == "cusp":
            out["p"] = w.p
        if self.ring == "ded":
            out["primes"] = w.n_primes
        out["suites"] = ",".join(self.selected())
        out["mode"] = self.mode
        return out


def worker_count(default: Optional[int] = None) -> int:
    """Worker processes to use; the environment variable caps it."""
    n = default or os.cpu_count() or 1
    cap = os.environ.get(WORKERS_ENV)
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {cap!r}") from None
    return n
