"""Small report containers shared by the verification routines."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self):
        return self.residual < self.tolerance

    def as_dict(self):
        return {
            "name": self.name,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": bool(self.passed),
        }


@dataclass
class AlgebraReport:
    checks: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def add(self, name, residual, tolerance):
        self.checks.append(Check(name, float(residual), float(tolerance)))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self):
        return max((c.residual for c in self.checks), default=0.0)

    def as_dict(self):
        return {
            "checks": [c.as_dict() for c in self.checks],
            "overall_pass": bool(self.passed),
            "max_residual": self.max_residual,
            "notes": dict(self.notes),
        }
