"""Verification reports: ordered named checks, text or JSON output.

JSON shape (field names are a stable contract)::

    {"suite": str,
     "checks": [{"name": str, "status": "pass" | "fail" | "error",
                 "expected": str, "actual": str, "ms": float | null}]}

``ms`` is null unless timings were requested, so that fixed-seed reports
are byte-identical across runs.
"""

from __future__ import annotations

import json
import time
import traceback
from dataclasses import dataclass, field
from typing import Callable

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass
class Check:
    name: str
    status: str
    expected: str
    actual: str
    ms: float = 0.0

    def as_dict(self, timings: bool) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "ms": round(self.ms, 3) if timings else None,
        }


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, expected, actual, ms: float = 0.0) -> Check:
        c = Check(name, PASS if ok else FAIL, str(expected), str(actual), ms)
        self.checks.append(c)
        return c

    def run(self, name: str, fn: Callable[[], tuple]) -> Check:
        """Run ``fn() -> (ok, expected, actual)``; exceptions become status=error."""
        start = time.perf_counter()
        try:
            ok, expected, actual = fn()
        except Exception as exc:  # a crashing check is reported, not raised
            ms = (time.perf_counter() - start) * 1000
            last = traceback.format_exception_only(type(exc), exc)[-1].strip()
            c = Check(name, ERROR, "", last, ms)
            self.checks.append(c)
            return c
        ms = (time.perf_counter() - start) * 1000
        return self.add(name, bool(ok), expected, actual, ms)

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.expected, c.actual, c.ms))

    @property
    def ok(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, ERROR: 0}
        for c in self.checks:
            out[c.status] += 1
        return out


def emit_json(report: Report, timings: bool = False) -> str:
    data = {"suite": report.suite, "checks": [c.as_dict(timings) for c in report.checks]}
    return json.dumps(data, ensure_ascii=False, indent=2)


def emit_text(report: Report, timings: bool = False) -> str:
    lines = [f"suite: {report.suite}"]
    for c in report.checks:
        tail = f"  ({c.ms:.1f} ms)" if timings else ""
        lines.append(f"[{c.status.upper():5}] {c.name}{tail}")
        if c.status != PASS or c.expected != c.actual:
            lines.append(f"        expected: {c.expected}")
            lines.append(f"        actual:   {c.actual}")
        else:
            lines.append(f"        value:    {c.actual}")
    n = report.counts()
    lines.append(f"summary: {n[PASS]} passed, {n[FAIL]} failed, {n[ERROR]} errors")
    return "\n".join(lines)


def emit(report: Report, fmt: str = "text", timings: bool = False) -> str:
    if fmt == "json":
        return emit_json(report, timings)
    if fmt == "text":
        return emit_text(report, timings)
    raise ValueError(f"unknown format {fmt!r}")
