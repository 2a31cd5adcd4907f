"""Verification certificates: named numeric residuals plus a pass flag."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Certificate:
    """Record of residuals from checking a construction against its defining conditions.

    ``passed`` is true iff every residual is at most ``tolerance``; a NaN
    residual always fails.
    """

    residuals: dict[str, float]
    tolerance: float
    passed: bool

    @classmethod
    def from_residuals(cls, residuals: dict[str, float], tolerance: float) -> "Certificate":
        ok = all(v <= tolerance for v in residuals.values())
        return cls(dict(residuals), tolerance, ok)

    def worst(self) -> tuple[str, float]:
        """Name and value of the largest residual."""
        name = max(self.residuals, key=lambda k: self.residuals[k])
        return name, self.residuals[name]

    def failing(self) -> dict[str, float]:
        """Residuals exceeding the tolerance (NaN counts as failing)."""
        return {k: v for k, v in self.residuals.items() if not v <= self.tolerance}
