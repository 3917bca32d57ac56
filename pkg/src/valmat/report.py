"""Small result containers returned by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of an exhaustive axiom check; falsy on failure.

    ``witness`` holds the first violating tuple found (element sets are
    ``frozenset`` values) and is ``None`` when the check passes.
    """

    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class Report:
    """Named clause results for multi-part verifications."""

    clauses: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, Any] = field(default_factory=dict)

    def record(self, name: str, ok: bool, note: Any = None) -> bool:
        self.clauses[name] = self.clauses.get(name, True) and bool(ok)
        if note is not None and not ok:
            self.notes.setdefault(name, note)
        return ok

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())

    @property
    def violations(self) -> list[str]:
        return [k for k, v in self.clauses.items() if not v]

    def __bool__(self) -> bool:
        return self.ok
