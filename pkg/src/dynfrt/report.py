"""Pass/fail records shared by every certifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    name: str
    passed: bool
    witness: Any = None
    count: int = 0
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self, with_witness: bool = False) -> dict:
        out: dict[str, Any] = {"name": self.name, "pass": self.passed}
        if self.count:
            out["instances"] = self.count
        if self.details:
            out["details"] = self.details
        if self.witness is not None and (not self.passed or with_witness):
            out["witness"] = self.witness
        return out


class StructureError(ValueError):
    """Malformed input data: wrong dimensions, out-of-range entries, bad JSON shape."""
