"""Machine-readable verification reports.

A Check records one verified statement: a stable id, the anchor naming the
statement in the source text, PASS/FAIL/SKIP, the computed value or residual,
and the expected value with its provenance ("stated" when the number is
displayed in the source, "derived" when an independent computation fixed it,
"trivial" for structural facts).
"""

from __future__ import annotations

import json
from fractions import Fraction


def fmt(value) -> str:
    """Exact rendering: rationals as p/q strings, containers element-wise."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(fmt(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {fmt(v)}" for k, v in value.items()) + "}"
    return str(value)


class Check:
    def __init__(self, check_id, anchor, status, value="", expected="",
                 provenance="derived"):
        assert status in ("PASS", "FAIL", "SKIP")
        self.id = check_id
        self.anchor = anchor
        self.status = status
        self.value = fmt(value)
        self.expected = fmt(expected)
        self.provenance = provenance

    def as_dict(self):
        return {"id": self.id, "anchor": self.anchor, "status": self.status,
                "value": self.value, "expected": self.expected,
                "provenance": self.provenance}


def check(check_id, anchor, ok, value="", expected="", provenance="derived"):
    return Check(check_id, anchor, "PASS" if ok else "FAIL", value, expected,
                 provenance)


def skip(check_id, anchor, reason):
    return Check(check_id, anchor, "SKIP", value=reason,
                 expected="out of scope: global/analytic statement",
                 provenance="stated")


class Report:
    def __init__(self, suite, checks):
        self.suite = suite
        self.checks = list(checks)

    @property
    def failed(self):
        return [c for c in self.checks if c.status == "FAIL"]

    @property
    def ok(self):
        return not self.failed

    def counts(self):
        out = {"PASS": 0, "FAIL": 0, "SKIP": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def as_dict(self):
        return {"suite": self.suite, "counts": self.counts(),
                "checks": [c.as_dict() for c in self.checks]}

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2)

    def render(self):
        lines = [f"suite {self.suite}"]
        width = max((len(c.id) for c in self.checks), default=10)
        for c in self.checks:
            line = f"  [{c.status:4}] {c.id:<{width}}  ({c.anchor})"
            if c.status == "FAIL":
                line += f"  value={c.value} expected={c.expected}"
            elif c.status == "SKIP":
                line += f"  {c.value}"
            lines.append(line)
        counts = self.counts()
        lines.append(f"  {counts['PASS']} passed, {counts['FAIL']} failed, "
                     f"{counts['SKIP']} skipped")
        return "\n".join(lines)


def merge(name, reports):
    checks = []
    for r in reports:
        checks.extend(r.checks)
    return Report(name, checks)
