"""Machine-readable reports emitted by the command-line tools."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CaseResult:
    case_id: str
    route_values: dict[str, Any]
    verdict: bool

    def to_json(self) -> dict[str, Any]:
        return {"case_id": self.case_id, "route_values": self.route_values, "verdict": bool(self.verdict)}


@dataclass
class ReportDocument:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    results: list[CaseResult] = field(default_factory=list)

    def add(self, case_id: str, verdict: bool, **routes: Any) -> CaseResult:
        res = CaseResult(case_id, routes, bool(verdict))
        self.results.append(res)
        return res

    def extend(self, results: list[CaseResult]) -> None:
        self.results.extend(results)

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for r in self.results if r.verdict)
        return {"checked": len(self.results), "passed": passed, "failed": len(self.results) - passed}

    @property
    def ok(self) -> bool:
        return all(r.verdict for r in self.results)

    def failures(self) -> list[CaseResult]:
        return [r for r in self.results if not r.verdict]

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "params": self.params,
            "results": [r.to_json() for r in sorted(self.results, key=lambda r: r.case_id)],
            "summary": self.summary,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)
