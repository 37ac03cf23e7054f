"""Verification reports: one named check, its verdict and its evidence."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .groebner import STATS, stats_since

VERIFIED = "verified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"
INVALID = "invalid-instance"


@dataclass
class VerificationReport:
    claim: str
    instance: dict
    verdict: str
    witnesses: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict == VERIFIED

    def as_dict(self) -> dict:
        return {"claim": self.claim, "instance": self.instance, "verdict": self.verdict,
                "witnesses": self.witnesses, "stats": self.stats, "timings": self.timings}


class Run:
    """Collects stats and wall time for one report."""

    def __init__(self, claim: str, instance: dict):
        self.claim = claim
        self.instance = instance
        self.before = STATS.snapshot()
        self.start = time.perf_counter()

    def done(self, verdict: str, witnesses: dict) -> VerificationReport:
        return VerificationReport(self.claim, self.instance, verdict, witnesses,
                                  stats_since(self.before),
                                  {"wall_seconds": round(time.perf_counter() - self.start, 6)})


def invalid(claim: str, instance: dict, reasons: list[str]) -> VerificationReport:
    return VerificationReport(claim, instance, INVALID, {"violations": reasons})


def combine(verdicts) -> str:
    verdicts = list(verdicts)
    if REFUTED in verdicts:
        return REFUTED
    if INVALID in verdicts:
        return INVALID
    if all(v == VERIFIED for v in verdicts):
        return VERIFIED
    return INCONCLUSIVE
