"""Run reports: deterministic, diff-stable text and record output.

One record per item, tab-separated {suite, item, verdict, value, detail};
all numeric values print as exact rationals p/q, never decimals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def fmt_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return f"{value}/1"
    return str(value)


@dataclass(frozen=True)
class ReportItem:
    name: str
    passed: bool
    value: object = None
    detail: str = ""

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "FAIL"


@dataclass
class RunReport:
    suite: str
    items: list[ReportItem] = field(default_factory=list)

    def add(self, name: str, passed: bool, value=None, detail: str = "") -> None:
        self.items.append(ReportItem(name, passed, value, detail))

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: "
                 f"{'pass' if self.passed else 'FAIL'} "
                 f"({sum(i.passed for i in self.items)}/{len(self.items)} items)"]
        for item in self.items:
            line = f"  [{item.verdict}] {item.name}"
            if item.value is not None:
                line += f" = {fmt_value(item.value)}"
            if item.detail:
                line += f"  ({item.detail})"
            lines.append(line)
        return "\n".join(lines) + "\n"

    def to_records(self) -> str:
        lines = []
        for item in self.items:
            lines.append("\t".join([self.suite, item.name, item.verdict,
                                    fmt_value(item.value), item.detail]))
        return "\n".join(lines) + "\n" if lines else ""
