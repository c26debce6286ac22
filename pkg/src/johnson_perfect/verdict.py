from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of one necessary-condition check.

    ``reason`` is ``None`` on a pass. ``witness`` holds the exact values that
    let a reader redo the check by hand.
    """

    passed: bool
    reason: str | None = None
    witness: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def ok(cls, **witness: Any) -> "Verdict":
        return cls(True, None, witness)

    @classmethod
    def fail(cls, reason: str, **witness: Any) -> "Verdict":
        return cls(False, reason, witness)

    def __bool__(self) -> bool:
        return self.passed
