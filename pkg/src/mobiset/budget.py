"""Wall-clock / node-count budgets for the backtracking searches."""

import time
from dataclasses import dataclass


class BudgetExceededError(RuntimeError):
    """A search ran out of budget before reaching a verdict."""

    def __init__(self, what: str, nodes: int, elapsed: float):
        super().__init__(f"{what}: budget exceeded after {nodes} nodes, {elapsed:.2f}s")
        self.nodes = nodes
        self.elapsed = elapsed


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a search; None means unlimited."""

    seconds: float | None = None
    nodes: int | None = None

    @classmethod
    def coerce(cls, value) -> "SearchBudget | None":
        """Accept a SearchBudget, a plain number of seconds, or None."""
        if value is None or isinstance(value, SearchBudget):
            return value
        return cls(seconds=float(value))


class BudgetMeter:
    """Counts search nodes and checks the limits every few hundred ticks."""

    __slots__ = ("budget", "what", "nodes", "_t0", "_next_clock")

    def __init__(self, budget: "SearchBudget | float | None", what: str):
        self.budget = SearchBudget.coerce(budget)
        self.what = what
        self.nodes = 0
        self._t0 = time.monotonic()
        self._next_clock = 0

    def elapsed(self) -> float:
        return time.monotonic() - self._t0

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.budget is None:
            return
        if self.budget.nodes is not None and self.nodes > self.budget.nodes:
            raise BudgetExceededError(self.what, self.nodes, self.elapsed())
        if self.budget.seconds is not None and self.nodes >= self._next_clock:
            self._next_clock = self.nodes + 256
            if self.elapsed() > self.budget.seconds:
                raise BudgetExceededError(self.what, self.nodes, self.elapsed())
