"""Verification report plumbing shared by the sweep checkers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ["VerificationReport", "FAILURE_CAP"]

FAILURE_CAP = 25  # keep every report readable; the count still reflects all failures


@dataclass
class VerificationReport:
    """Outcome of sweeping one claim over an index range.

    ``failures`` holds at most FAILURE_CAP records (sorted by the order they
    were found, which is ascending in n for every checker here);
    ``failure_count`` counts all of them.  ``passed`` is true exactly when
    nothing failed.
    """

    label: str
    spec: dict[str, Any] | None = None
    checked: int = 0
    skipped: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    failure_count: int = 0
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record_failure(self, **fields: Any) -> None:
        self.failure_count += 1
        if len(self.failures) < FAILURE_CAP:
            self.failures.append(dict(fields))

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "spec": self.spec,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": [
                {k: (str(v) if isinstance(v, int) and abs(v) > 2**53 else v) for k, v in f.items()}
                for f in self.failures
            ],
            "failure_count": self.failure_count,
            "passed": self.passed,
            "metadata": self.metadata,
        }
