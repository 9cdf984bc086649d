"""Exception types shared by all solvers.

Each error carries the process exit code the command line front end uses
when the error escapes a command.
"""

from __future__ import annotations


class DecminError(Exception):
    exit_code = 1


class InfeasibleError(DecminError):
    """The instance has no feasible solution.

    ``subset`` is a violating set (list of element indices) when one is
    known, ``reason`` names the inequality that fails on it.
    """

    exit_code = 2

    def __init__(self, message: str, subset=None, reason: str | None = None):
        super().__init__(message)
        self.subset = None if subset is None else sorted(subset)
        self.reason = reason

    def to_json(self) -> dict:
        return {"error": "infeasible", "message": str(self), "subset": self.subset, "reason": self.reason}


class ParseError(DecminError):
    exit_code = 3


class CapacityError(DecminError):
    """Instance exceeds an enumeration cap."""

    exit_code = 4


class BudgetError(DecminError):
    """An iterative routine ran out of its step budget."""

    exit_code = 4


class NotDecMinError(DecminError):
    """A vector handed to a routine that needs a dec-min input is not dec-min."""
