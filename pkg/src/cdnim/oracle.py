"""Ground-truth Grundy values by mex recursion, and exhaustive verification.

This module never looks at the closed-form evaluator except to compare
against it: `grundy_recursive` computes values straight from the mex
definition over next positions, and `verify_grid` sweeps a whole grid of
positions checking the two routes agree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from . import core
from .core import GameError, Position, next_positions

# Refuse grids larger than this unless the caller raises the cap.
DEFAULT_CAP = 10_000_000

MemoTable = dict[Position, int]


class GridCapExceededError(GameError):
    """Grid verification refused because the position count exceeds the cap."""


def mex(values: Iterable[int]) -> int:
    """Minimal excludant: smallest nonnegative integer not in ``values``."""
    seen = set(values)
    result = 0
    while result in seen:
        result += 1
    return result


def grundy_recursive(
    position: Position,
    memo: Optional[MemoTable] = None,
    *,
    sort_piles: bool = False,
) -> int:
    """Grundy value by memoized mex recursion over next positions.

    Runs on an explicit stack, so depth is bounded by memory rather than
    the interpreter recursion limit (a game from pile sum S can be S moves
    long). ``memo`` may be reused across calls; entries never change once
    written. With ``sort_piles`` the memo is keyed by the sorted pile
    tuple, exploiting permutation symmetry; off by default and validated
    against the plain keying in the tests.
    """
    if memo is None:
        memo = {}

    def key(p: Position) -> Position:
        return tuple(sorted(p)) if sort_piles else p

    root = key(position)
    stack = [root]
    while stack:
        current = stack[-1]
        if current in memo:
            stack.pop()
            continue
        successors = [key(q) for q in next_positions(current)]
        missing = [q for q in successors if q not in memo]
        if missing:
            stack.extend(missing)
        else:
            memo[current] = mex(memo[q] for q in successors)
            stack.pop()
    return memo[root]


@dataclass(frozen=True)
class Mismatch:
    """One position where the closed form and the recursion disagree."""

    position: Position
    formula_value: int
    oracle_value: int


@dataclass
class VerifyReport:
    """Outcome of one exhaustive grid sweep."""

    dims: int
    bound: int
    positions_checked: int
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        lines = [
            f"dims {self.dims} max {self.bound}",
            f"positions {self.positions_checked}",
            f"mismatches {len(self.mismatches)}",
            f"elapsed {self.elapsed_seconds:.3f}s",
        ]
        for m in self.mismatches:
            lines.append(
                f"mismatch {m.position} formula {m.formula_value} oracle {m.oracle_value}"
            )
        return "\n".join(lines)

    def machine_records(self) -> list[dict]:
        """Per-mismatch records followed by one summary record. Elapsed
        time is deliberately excluded so output is run-to-run stable."""
        records: list[dict] = [
            {
                "type": "mismatch",
                "position": list(m.position),
                "formula": m.formula_value,
                "oracle": m.oracle_value,
            }
            for m in self.mismatches
        ]
        records.append(
            {
                "type": "verify",
                "dims": self.dims,
                "max": self.bound,
                "positions": self.positions_checked,
                "mismatches": len(self.mismatches),
            }
        )
        return records


def positions_by_sum(dims: int, bound: int) -> Iterator[Position]:
    """All positions in {0..bound}^dims, ascending pile sum, lexicographic
    within a sum. Every successor of a position precedes it."""
    for total in range(dims * bound + 1):
        yield from _bounded_compositions(dims, total, bound)


def _bounded_compositions(dims: int, total: int, bound: int) -> Iterator[Position]:
    if dims == 1:
        if total <= bound:
            yield (total,)
        return
    for first in range(min(total, bound) + 1):
        for rest in _bounded_compositions(dims - 1, total - first, bound):
            yield (first,) + rest


def verify_grid(
    dims: int,
    bound: int,
    *,
    cap: int = DEFAULT_CAP,
    formula: Optional[Callable[[Position], int]] = None,
) -> VerifyReport:
    """Compare the closed form against the mex recursion on every position
    in {0..bound}^dims.

    The sweep fills the memo bottom-up in pile-sum order, so no position is
    visited before its successors and no deep recursion ever happens.
    Refuses grids with more than ``cap`` positions.
    """
    if dims < 1:
        raise ValueError("dims must be >= 1")
    if bound < 0:
        raise ValueError("bound must be >= 0")
    total = (bound + 1) ** dims
    if total > cap:
        raise GridCapExceededError(
            f"grid has {total} positions, above the cap of {cap}; "
            "raise the cap to force the sweep"
        )
    if formula is None:
        formula = core.grundy_value

    memo: MemoTable = {}
    mismatches: list[Mismatch] = []
    started = time.perf_counter()
    checked = 0
    for position in positions_by_sum(dims, bound):
        value = mex(memo[q] for q in next_positions(position))
        memo[position] = value
        checked += 1
        expected = formula(position)
        if expected != value:
            mismatches.append(Mismatch(position, expected, value))
    elapsed = time.perf_counter() - started
    return VerifyReport(
        dims=dims,
        bound=bound,
        positions_checked=checked,
        mismatches=mismatches,
        elapsed_seconds=elapsed,
    )
