"""Common-divisor nim: rules, evaluation, verification, and optimal play."""

from .core import (
    INFINITY,
    MAX_PILE,
    GameError,
    IllegalMoveError,
    InvalidPositionError,
    Move,
    MoveAmountError,
    MoveDivisorError,
    MoveIndexError,
    Ord2,
    Position,
    TerminalPositionError,
    Valuation,
    apply_move,
    common_divisors,
    grundy_value,
    is_terminal,
    legal_moves,
    make_position,
    next_positions,
    ord2,
    valuation,
)
from .oracle import (
    DEFAULT_CAP,
    GridCapExceededError,
    MemoTable,
    Mismatch,
    VerifyReport,
    grundy_recursive,
    mex,
    positions_by_sum,
    verify_grid,
)
from .strategy import (
    LOSING,
    TERMINAL,
    WINNING,
    StrategyAdvice,
    StrategyError,
    UnreachableTargetError,
    best_move,
    classify,
    move_to_value,
)

__all__ = [
    "INFINITY",
    "MAX_PILE",
    "GameError",
    "IllegalMoveError",
    "InvalidPositionError",
    "Move",
    "MoveAmountError",
    "MoveDivisorError",
    "MoveIndexError",
    "Ord2",
    "Position",
    "TerminalPositionError",
    "Valuation",
    "apply_move",
    "common_divisors",
    "grundy_value",
    "is_terminal",
    "legal_moves",
    "make_position",
    "next_positions",
    "ord2",
    "valuation",
    "DEFAULT_CAP",
    "GridCapExceededError",
    "MemoTable",
    "Mismatch",
    "VerifyReport",
    "grundy_recursive",
    "mex",
    "positions_by_sum",
    "verify_grid",
    "LOSING",
    "TERMINAL",
    "WINNING",
    "StrategyAdvice",
    "StrategyError",
    "UnreachableTargetError",
    "best_move",
    "classify",
    "move_to_value",
]

__version__ = "0.1.0"
