"""Constructive optimal play.

`move_to_value` builds, not searches for, a move whose successor has any
requested Grundy value below the current one. Reaching value 0 is exactly
a winning move, which is what `best_move` packages for the CLI and the
play service.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    GameError,
    Move,
    Position,
    apply_move,
    grundy_value,
    is_terminal,
    legal_moves,
    ord2,
    valuation,
)

WINNING = "winning"
LOSING = "losing"
TERMINAL = "terminal"


class UnreachableTargetError(GameError):
    """Requested successor value is not below the position's own value."""


class StrategyError(GameError):
    """Internal consistency failure: a constructed move missed its target."""


@dataclass(frozen=True)
class StrategyAdvice:
    """What to play from a position.

    ``move`` is present exactly when the position is winning and leads to
    a Grundy-0 successor. From a losing position every move loses against
    perfect play, so ``fallback`` just offers the deterministic first
    legal move and no recommendation is made.
    """

    status: str
    move: Optional[Move] = None
    fallback: Optional[Move] = None
    target_sg: Optional[int] = None


def classify(position: Position) -> str:
    """terminal, losing (Grundy 0 with moves left), or winning."""
    if is_terminal(position):
        return TERMINAL
    return LOSING if grundy_value(position) == 0 else WINNING


def move_to_value(position: Position, target: int) -> Move:
    """A legal move whose successor has Grundy value ``target``.

    Only targets strictly below the current value are reachable, which
    forces the current value to be positive: the minimum pile valuation is
    finite and attained an odd number of times. The move is built by case,
    never by search:

    - target > 0: subtract 2**(target-1) from the first pile attaining the
      minimum valuation. The new pile's valuation becomes target-1 and is
      the unique minimum, so the successor evaluates to target.
    - target = 0, one nonzero pile: empty it.
    - target = 0, minimum attained >= 3 times: subtract 2**min from the
      first attaining pile, lifting its valuation and leaving an even
      count at the minimum.
    - target = 0, minimum attained once (several nonzero piles): subtract
      2**min from the first pile attaining the next-smallest valuation,
      dropping it to the minimum so the count becomes two.

    The constructed successor is re-evaluated before returning; a mismatch
    raises StrategyError rather than returning a wrong move.
    """
    current = grundy_value(position)
    if not 0 <= target < current:
        raise UnreachableTargetError(
            f"no move from a value-{current} position reaches value {target}"
        )
    v = valuation(position)
    low = v.min_ord2.exponent  # finite: current > 0

    if target > 0:
        move = Move(v.min_index, 1 << (target - 1))
    else:
        nonzero = [i for i, n in enumerate(position, start=1) if n]
        if len(nonzero) == 1:
            only = nonzero[0]
            move = Move(only, position[only - 1])
        elif v.min_count >= 3:
            move = Move(v.min_index, 1 << low)
        else:
            move = Move(_next_min_index(position, v.min_index), 1 << low)

    successor = apply_move(position, move)
    achieved = grundy_value(successor)
    if achieved != target:
        raise StrategyError(
            f"constructed move {move} from {position} reached value "
            f"{achieved}, wanted {target}"
        )
    return move


def _next_min_index(position: Position, skip_index: int) -> int:
    """First pile index (1-based) attaining the smallest valuation among
    piles other than ``skip_index``."""
    best = None
    best_index = 0
    for i, n in enumerate(position, start=1):
        if i == skip_index:
            continue
        o = ord2(n)
        if best is None or o < best:
            best = o
            best_index = i
    return best_index


def best_move(position: Position) -> StrategyAdvice:
    """Perfect-play advice: the constructed winning move when one exists,
    otherwise the deterministic first legal move as a fallback."""
    if is_terminal(position):
        return StrategyAdvice(status=TERMINAL)
    if grundy_value(position) == 0:
        return StrategyAdvice(status=LOSING, fallback=legal_moves(position)[0])
    return StrategyAdvice(status=WINNING, move=move_to_value(position, 0), target_sg=0)
