"""Small result records returned by the verification-style operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ["SimplicityReport", "Verdict"]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural check; carries a witness when it fails."""

    ok: bool
    detail: str = ""
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SimplicityReport:
    """Result of sweeping bimodule closures over a degree-k component."""

    n: int
    k: int
    expected_dimension: int
    seeds_checked: int
    failures: tuple[tuple[str, int], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok
