"""The structured result every identity checker returns."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..indexlists import PairClass, format_index_list, format_pair_class

__all__ = ["IdentityReport", "render_param"]


def render_param(value: Any) -> Any:
    """JSON-friendly rendering: scalars as ``"p/q"``, lists as ``"(1,2)"``."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, PairClass):
        return format_pair_class(value)
    if isinstance(value, tuple) and all(isinstance(x, int) for x in value):
        return format_index_list(value)
    if isinstance(value, (list, tuple)):
        return [render_param(v) for v in value]
    if isinstance(value, dict):
        return {k: render_param(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of one cross-multiplied identity check.

    ``holds`` is derived, never stored independently of ``lhs`` and ``rhs``.
    ``verdict`` is ``"holds"`` or ``"fails"`` unless a checker marks the
    check ``"not applicable"`` or ``"inconclusive"``.
    """

    identity: str
    params: dict
    lhs: Fraction
    rhs: Fraction
    notes: str = ""
    status: str | None = field(default=None)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        if self.status:
            return self.status
        return "holds" if self.holds else "fails"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": render_param(self.params),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            "verdict": self.verdict,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(", ", ": "))

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in render_param(self.params).items())
        return f"{self.identity:<14} {self.verdict:<14} lhs={self.lhs} rhs={self.rhs} {params}"
