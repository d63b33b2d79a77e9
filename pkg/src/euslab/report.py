"""Self-describing JSON document for scan and verification output."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .indices import EPS


@dataclass
class ReportDocument:
    command: list[str]
    verdicts: list[dict] = field(default_factory=list)
    reports: list[dict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    tool: str = "euslab"
    version: str = __version__
    eps: float = EPS

    def stable(self) -> dict:
        doc = {"tool": self.tool, "version": self.version, "command": self.command, "eps": self.eps}
        if self.verdicts:
            doc["verdicts"] = self.verdicts
        if self.reports:
            doc["reports"] = self.reports
        return doc

    def to_json(self, timings: bool = True) -> str:
        doc = self.stable()
        if timings:
            doc["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        d = json.loads(text)
        return cls(
            command=d["command"],
            verdicts=d.get("verdicts", []),
            reports=d.get("reports", []),
            timings=d.get("timings", {}),
            tool=d["tool"],
            version=d["version"],
            eps=d["eps"],
        )

    @property
    def refuted(self) -> int:
        return sum(1 for v in self.verdicts if v["status"] == "refuted")
