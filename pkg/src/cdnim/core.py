"""Rules and closed-form evaluation for common-divisor nim.

The game is played on m piles of nonnegative integers. A move picks one
pile and subtracts from it a positive common divisor of *all* pile sizes
(every positive integer divides 0, so empty piles never constrain the
divisor choice). The player who cannot move, i.e. who faces the all-zero
position, loses.

Everything in this module is a pure function of its inputs; positions are
plain tuples and can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Optional

# Hard input bound: pile sizes must fit in an unsigned 64-bit integer.
# Moves only subtract, so arithmetic can never overflow this range.
MAX_PILE = 2**64 - 1

Position = tuple[int, ...]


class GameError(Exception):
    """Base class for all rule violations reported by this package."""


class InvalidPositionError(GameError):
    """Raised when a pile list cannot form a valid position."""


class TerminalPositionError(GameError):
    """Raised when an operation requires at least one nonzero pile."""


class IllegalMoveError(GameError):
    """A move that the rules reject. ``code`` is machine-readable."""

    code = "illegal_move"


class MoveIndexError(IllegalMoveError):
    code = "index_out_of_range"


class MoveAmountError(IllegalMoveError):
    code = "amount_exceeds_pile"


class MoveDivisorError(IllegalMoveError):
    code = "not_a_common_divisor"


@total_ordering
@dataclass(frozen=True)
class Ord2:
    """A 2-adic valuation: a finite exponent, or infinity for the value 0.

    ``exponent`` is ``None`` for the infinite valuation. Comparison is
    total; infinity is strictly greater than every finite valuation.
    """

    exponent: Optional[int]

    def __post_init__(self) -> None:
        if self.exponent is not None and self.exponent < 0:
            raise ValueError("finite valuation exponent must be >= 0")

    @classmethod
    def finite(cls, exponent: int) -> "Ord2":
        return cls(exponent)

    @property
    def is_finite(self) -> bool:
        return self.exponent is not None

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Ord2):
            return NotImplemented
        if self.exponent is None:
            return False
        if other.exponent is None:
            return True
        return self.exponent < other.exponent

    def __str__(self) -> str:
        return "inf" if self.exponent is None else str(self.exponent)


INFINITY = Ord2(None)


@dataclass(frozen=True, order=True)
class Move:
    """One legal play: subtract ``amount`` from pile number ``index``.

    ``index`` is 1-based, matching how piles are presented on every
    external surface (CLI, service, UI). Field order makes the natural
    sort order (index, amount).
    """

    index: int
    amount: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise MoveIndexError(f"pile index must be >= 1, got {self.index}")
        if self.amount < 1:
            raise MoveAmountError(f"move amount must be >= 1, got {self.amount}")


@dataclass(frozen=True)
class Valuation:
    """Per-position summary of the pile valuations.

    min_ord2:       smallest 2-adic valuation over all piles (infinite only
                    for the all-zero position).
    min_count:      how many piles attain min_ord2.
    min_index:      1-based index of the first pile attaining min_ord2.
    other_min_ord2: smallest valuation over the piles *other than*
                    min_index; infinite for single-pile positions.
    """

    min_ord2: Ord2
    min_count: int
    min_index: int
    other_min_ord2: Ord2


def ord2(a: int) -> Ord2:
    """2-adic valuation of ``a``: exponent of the largest power of 2
    dividing ``a``, or infinity when ``a`` is 0."""
    if a < 0:
        raise ValueError("valuation is defined for nonnegative integers")
    if a == 0:
        return INFINITY
    return Ord2((a & -a).bit_length() - 1)


def make_position(piles: Iterable[int]) -> Position:
    """Validate pile sizes and return the canonical position tuple."""
    pos = tuple(piles)
    if not pos:
        raise InvalidPositionError("a position needs at least one pile")
    for value in pos:
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidPositionError(f"pile size must be an integer, got {value!r}")
        if value < 0:
            raise InvalidPositionError(f"pile size must be >= 0, got {value}")
        if value > MAX_PILE:
            raise InvalidPositionError(f"pile size exceeds 64-bit bound: {value}")
    return pos


def is_terminal(position: Position) -> bool:
    """True exactly for the all-zero position, where no move exists."""
    return not any(position)


def valuation(position: Position) -> Valuation:
    """Scan the pile valuations once and summarize them.

    For the all-zero position the minimum is infinite and every pile
    attains it.
    """
    ords = [ord2(n) for n in position]
    least = min(ords)
    count = ords.count(least)
    first = ords.index(least)
    rest = [o for i, o in enumerate(ords) if i != first]
    return Valuation(
        min_ord2=least,
        min_count=count,
        min_index=first + 1,
        other_min_ord2=min(rest) if rest else INFINITY,
    )


def common_divisors(position: Position) -> list[int]:
    """All positive integers dividing every pile, in ascending order.

    Zero piles never constrain the result, so this is the divisor set of
    the gcd of the nonzero piles. The all-zero position is rejected: its
    divisor set would be every positive integer.
    """
    g = math.gcd(*position)
    if g == 0:
        raise TerminalPositionError("the all-zero position has no finite divisor set")
    small = []
    large = []
    for d in range(1, math.isqrt(g) + 1):
        if g % d == 0:
            small.append(d)
            if d != g // d:
                large.append(g // d)
    return small + large[::-1]


def legal_moves(position: Position) -> list[Move]:
    """Every legal move, sorted by (index, amount).

    Empty exactly for the all-zero position. A zero pile admits no move,
    since any amount would leave it negative.
    """
    if is_terminal(position):
        return []
    divisors = common_divisors(position)
    moves = []
    for i, pile in enumerate(position, start=1):
        for d in divisors:
            if d > pile:
                break
            moves.append(Move(i, d))
    return moves


def next_positions(position: Position) -> list[Position]:
    """Successor positions induced by the legal moves (no duplicates:
    distinct moves change distinct coordinates or by distinct amounts)."""
    return [apply_move(position, mv) for mv in legal_moves(position)]


def apply_move(position: Position, move: Move) -> Position:
    """Apply ``move`` to ``position``, validating it fully.

    The three ways a move can be illegal are reported as distinct error
    types: index out of range, amount larger than the chosen pile, amount
    not a common divisor of all piles.
    """
    if move.index > len(position):
        raise MoveIndexError(
            f"pile index {move.index} out of range for {len(position)} piles"
        )
    pile = position[move.index - 1]
    if move.amount > pile:
        raise MoveAmountError(
            f"cannot take {move.amount} from pile {move.index} holding {pile}"
        )
    g = math.gcd(*position)
    if g % move.amount != 0:
        raise MoveDivisorError(
            f"{move.amount} is not a common divisor of {position}"
        )
    return (
        position[: move.index - 1]
        + (pile - move.amount,)
        + position[move.index :]
    )


def grundy_value(position: Position) -> int:
    """Closed-form Sprague-Grundy value of a position.

    Zero for the all-zero position and whenever an even number of piles
    attain the minimum valuation; otherwise one more than that minimum.
    """
    v = valuation(position)
    if not v.min_ord2.is_finite or v.min_count % 2 == 0:
        return 0
    return v.min_ord2.exponent + 1
