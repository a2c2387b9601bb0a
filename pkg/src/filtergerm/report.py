"""Small result containers used by the checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    check: str
    message: str
    witness: tuple = ()

    def __str__(self):
        if self.witness:
            return f"{self.check}: {self.message} (witness {self.witness})"
        return f"{self.check}: {self.message}"


@dataclass
class CheckReport:
    """Outcome of a checker: ``ok`` iff no violation was recorded."""

    name: str
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, check, message, *witness):
        self.violations.append(Violation(check, message, tuple(witness)))

    def extend(self, other: CheckReport):
        self.violations.extend(other.violations)
        self.checked += other.checked

    def __bool__(self):
        return self.ok
