"""Machine-readable check reports.

Every suite emits a flat list of ``CheckReport`` records; the JSON form is
``{"check": ..., "instance": ..., "pass": ..., "witness": ...}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class CheckReport:
    check: str
    instance: str
    passed: bool
    witness: Any = None

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "instance": self.instance,
            "pass": self.passed,
            "witness": self.witness,
        }


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def first_failure(reports) -> CheckReport | None:
    for r in reports:
        if not r.passed:
            return r
    return None
