"""Run reports and their text, JSON and CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

SCHEMA = "resolvent.report/1"
STATUSES = ("pass", "fail", "skipped")


@dataclass
class Verdict:
    name: str
    status: str
    reason: str = ""
    group: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class Report:
    command: str
    source: str
    p: int
    q: Optional[int] = None
    parameters: Dict[str, int] = field(default_factory=dict)
    max_degree: Optional[int] = None
    verdicts: List[Verdict] = field(default_factory=list)
    betti: Optional[List[int]] = None
    engine: Optional[str] = None
    tips: Optional[List[str]] = None
    dimension: Optional[int] = None
    hilbert: Optional[List[int]] = None
    certificate: Optional[str] = None
    timing: Optional[Dict[str, float]] = None

    def add(self, name: str, passed: bool, reason: str = "", group: str = "") -> None:
        self.verdicts.append(Verdict(name, "pass" if passed else "fail", reason, group))

    def skip(self, name: str, reason: str, group: str = "") -> None:
        self.verdicts.append(Verdict(name, "skipped", reason, group))

    @property
    def failed(self) -> List[Verdict]:
        return [v for v in self.verdicts if v.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "schema": SCHEMA,
            "command": self.command,
            "input": {"source": self.source, "p": self.p, "q": self.q,
                      "parameters": dict(sorted(self.parameters.items())),
                      "max_degree": self.max_degree},
        }
        if self.tips is not None:
            d["groebner"] = {"tips": self.tips, "dimension": self.dimension,
                             "hilbert": self.hilbert, "certificate": self.certificate}
        if self.betti is not None:
            d["betti"] = {"engine": self.engine, "values": self.betti}
        d["checks"] = [asdict(v) for v in self.verdicts]
        d["summary"] = {s: sum(v.status == s for v in self.verdicts) for s in STATUSES}
        if self.timing is not None:
            d["timing"] = self.timing
        return d


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=False) + "\n"


def render_text(report: Report) -> str:
    lines = [f"command: {report.command}", f"input: {report.source}", f"p: {report.p}"]
    if report.q is not None:
        lines.append(f"q: {report.q}")
    for k, v in sorted(report.parameters.items()):
        lines.append(f"{k}: {v}")
    if report.max_degree is not None:
        lines.append(f"max degree: {report.max_degree}")
    if report.tips is not None:
        lines.append(f"tips ({len(report.tips)}): {', '.join(report.tips)}")
        lines.append(f"dimension: {report.dimension}")
        lines.append(f"hilbert function: {' '.join(map(str, report.hilbert or []))}")
        lines.append(f"certificate: {report.certificate}")
    if report.betti is not None:
        lines.append(f"engine: {report.engine}")
        lines.append("n  betti")
        for n, b in enumerate(report.betti):
            lines.append(f"{n:<2} {b}")
    for v in report.verdicts:
        tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[v.status]
        name = f"[{v.group}] {v.name}" if v.group else v.name
        lines.append(f"{tag} {name}" + (f": {v.reason}" if v.reason else ""))
    if report.verdicts:
        counts = report.to_dict()["summary"]
        lines.append(f"summary: {counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    if report.timing is not None:
        for k, v in report.timing.items():
            lines.append(f"time {k}: {v:.3f}s")
    return "\n".join(lines) + "\n"


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["section", "name", "status", "value"])
    if report.tips is not None:
        for t in report.tips:
            w.writerow(["tip", t, "", ""])
        w.writerow(["dimension", "", "", report.dimension])
    if report.betti is not None:
        for n, b in enumerate(report.betti):
            w.writerow(["betti", n, "", b])
    for v in report.verdicts:
        w.writerow(["check", f"{v.group}:{v.name}" if v.group else v.name, v.status, v.reason])
    return buf.getvalue()


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render(report: Report, fmt: str) -> str:
    return RENDERERS[fmt](report)
