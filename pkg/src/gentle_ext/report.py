"""Reports: free text for people, then ``key=value`` records for scripts."""

from __future__ import annotations

import math


def fmt_dim(x) -> str:
    return "infinite" if x == math.inf else str(x)


class Report:
    def __init__(self, title: str):
        self.title = title
        self.lines: list[str] = []
        self.records: list[tuple[str, str]] = []

    def say(self, line: str = "") -> "Report":
        self.lines.append(line)
        return self

    def put(self, key: str, value) -> "Report":
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        self.records.append((key, str(value)))
        return self

    def get(self, key: str) -> str | None:
        for k, v in self.records:
            if k == key:
                return v
        return None

    def render(self) -> str:
        out = [self.title] + self.lines + ["", "[data]"] + [f"{k}={v}" for k, v in self.records]
        return "\n".join(out) + "\n"
