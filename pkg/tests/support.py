"""Shared helpers for the grid-sweep style tests."""

from __future__ import annotations

import itertools

from cdnim import (
    Move,
    Ord2,
    Position,
    apply_move,
    best_move,
    grundy_value,
    is_terminal,
    legal_moves,
    ord2,
    valuation,
)


def full_grid(dims: int, bound: int) -> list[Position]:
    return list(itertools.product(range(bound + 1), repeat=dims))


def valuation_case_violations(positions) -> list[tuple]:
    """Check the eight-case table for how one move changes a pile's
    valuation. Returns every (position, move, reason) that breaks it.

    With lam the position's minimum valuation, li the moved pile's
    valuation, k the amount's valuation, and after the new pile's
    valuation: k <= lam <= li always, and

      li > lam:  k=lam=0 -> after=0   k=0<lam -> after=0
                 0<k=lam -> after=lam  0<k<lam -> after=k
      li = lam:  k=lam=0 -> after>0   k=0<lam -> after=0
                 0<k=lam -> after>lam  0<k<lam -> after=k
    """
    zero = Ord2(0)
    violations = []
    for position in positions:
        if is_terminal(position):
            continue
        lam = valuation(position).min_ord2
        for move in legal_moves(position):
            li = ord2(position[move.index - 1])
            k = ord2(move.amount)
            after = ord2(apply_move(position, move)[move.index - 1])
            if not (k <= lam <= li):
                violations.append((position, move, "ordering"))
                continue
            if li > lam:
                if k == zero and lam == zero:
                    ok = after == zero
                elif k == zero and k < lam:
                    ok = after == zero
                elif zero < k and k == lam:
                    ok = after == lam
                else:  # 0 < k < lam
                    ok = after == k
            else:
                if k == zero and lam == zero:
                    ok = after > zero
                elif k == zero and k < lam:
                    ok = after == zero
                elif zero < k and k == lam:
                    ok = after > lam
                else:
                    ok = after == k
            if not ok:
                violations.append((position, move, "case"))
    return violations


def pick_move(position: Position, follow_strategy: bool) -> Move:
    if follow_strategy:
        advice = best_move(position)
        move = advice.move if advice.move is not None else advice.fallback
        assert move is not None
        return move
    return legal_moves(position)[0]


def winning_side_plays_last(start: Position) -> bool:
    """Self-play: the side owed the win by the evaluator follows the
    strategy, the other side plays the first legal move. True when the
    owed side makes the final move."""
    strategist_moves_first = grundy_value(start) > 0
    position = start
    first_player_to_move = True
    last_mover_was_first = None
    while not is_terminal(position):
        move = pick_move(
            position, follow_strategy=(first_player_to_move == strategist_moves_first)
        )
        position = apply_move(position, move)
        last_mover_was_first = first_player_to_move
        first_player_to_move = not first_player_to_move
    return last_mover_was_first == strategist_moves_first
