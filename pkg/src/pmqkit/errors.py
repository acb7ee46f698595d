"""Exception hierarchy shared by every pmqkit module.

Each class carries the CLI exit code it maps to.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One failed axiom together with the first witness found (lexicographic order)."""

    axiom: str
    witness: tuple
    message: str = ""

    def as_dict(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness), "message": self.message}


class PMQError(Exception):
    exit_code = 1


class ValidationError(PMQError):
    exit_code = 2

    def __init__(self, violations, what="structure"):
        self.violations = list(violations)
        axioms = ", ".join(sorted({v.axiom for v in self.violations}))
        super().__init__(f"invalid {what}: {axioms}")


class BudgetExceeded(PMQError):
    exit_code = 3

    def __init__(self, needed, budget, what="states"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}: {needed} exceeds budget {budget}")


class MalformedInput(PMQError):
    exit_code = 4

    def __init__(self, message, path="$", offset=None):
        self.path = path
        self.offset = offset
        where = f" at byte {offset}" if offset is not None else f" at {path}"
        super().__init__(message + where)


class UnsupportedInput(PMQError):
    """Input is valid but outside what the requested operation handles."""

    exit_code = 2
