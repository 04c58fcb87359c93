"""Command-line front end: evaluate, list moves, advise, verify, serve.

Exit codes: 0 ok, 1 verification found mismatches, 2 usage error,
3 grid above the resource cap, 4 service port unavailable.
"""

from __future__ import annotations

import argparse
import json
import socket
import sys
from typing import Optional, Sequence

from . import core, oracle, strategy

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_BIND = 4

FORMAT_TEXT = "text"
FORMAT_MACHINE = "machine"


def _pile(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"pile size must be an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("pile sizes must be >= 0")
    if value > core.MAX_PILE:
        raise argparse.ArgumentTypeError("pile sizes must fit in 64 bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdnim",
        description="Common-divisor nim: evaluation, verification, optimal play.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=(FORMAT_TEXT, FORMAT_MACHINE),
            default=FORMAT_TEXT,
            help="text for humans, machine for one JSON record per line",
        )

    p_sg = sub.add_parser("sg", help="Grundy value of a position")
    p_sg.add_argument("piles", nargs="+", type=_pile, metavar="PILE")
    add_format(p_sg)

    p_moves = sub.add_parser("moves", help="all legal moves of a position")
    p_moves.add_argument("piles", nargs="+", type=_pile, metavar="PILE")
    add_format(p_moves)

    p_best = sub.add_parser("best", help="perfect-play advice for a position")
    p_best.add_argument("piles", nargs="+", type=_pile, metavar="PILE")
    add_format(p_best)

    p_verify = sub.add_parser(
        "verify", help="check the closed form against the mex recursion on a grid"
    )
    p_verify.add_argument("--dims", type=int, required=True, help="number of piles")
    p_verify.add_argument(
        "--max", dest="bound", type=int, required=True, help="per-pile maximum"
    )
    p_verify.add_argument(
        "--cap",
        type=int,
        default=oracle.DEFAULT_CAP,
        help=f"refuse grids with more positions than this (default {oracle.DEFAULT_CAP})",
    )
    p_verify.add_argument(
        "--plot",
        metavar="PATH",
        default=None,
        help="also render the Grundy values of the grid as a figure file",
    )
    add_format(p_verify)

    p_serve = sub.add_parser("serve", help="run the JSON play service over HTTP")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True, separators=(",", ":")))


def _position(args: argparse.Namespace) -> core.Position:
    return core.make_position(args.piles)


def cmd_sg(args: argparse.Namespace) -> int:
    position = _position(args)
    value = core.grundy_value(position)
    v = core.valuation(position)
    if args.format == FORMAT_MACHINE:
        _emit(
            {
                "type": "sg",
                "piles": list(position),
                "grundy": value,
                "min_ord2": v.min_ord2.exponent,
                "min_count": v.min_count,
                "status": strategy.classify(position),
            }
        )
        return EXIT_OK
    print(f"grundy {value}")
    if core.is_terminal(position):
        print("terminal")
    else:
        print(f"min_ord2 {v.min_ord2}")
        print(f"min_count {v.min_count}")
    return EXIT_OK


def _format_move(position: core.Position, move: core.Move) -> str:
    successor = core.apply_move(position, move)
    return f"{move.index} {move.amount} -> {successor}"


def cmd_moves(args: argparse.Namespace) -> int:
    position = _position(args)
    moves = core.legal_moves(position)
    if args.format == FORMAT_MACHINE:
        for move in moves:
            _emit(
                {
                    "type": "move",
                    "piles": list(position),
                    "index": move.index,
                    "amount": move.amount,
                    "successor": list(core.apply_move(position, move)),
                }
            )
        return EXIT_OK
    if not moves:
        print("terminal")
        return EXIT_OK
    for move in moves:
        print(_format_move(position, move))
    return EXIT_OK


def cmd_best(args: argparse.Namespace) -> int:
    position = _position(args)
    advice = strategy.best_move(position)
    if args.format == FORMAT_MACHINE:
        record: dict = {"type": "best", "piles": list(position), "status": advice.status}
        if advice.move is not None:
            record["move"] = {"index": advice.move.index, "amount": advice.move.amount}
            record["successor"] = list(core.apply_move(position, advice.move))
            record["target_sg"] = advice.target_sg
        if advice.fallback is not None:
            record["fallback"] = {
                "index": advice.fallback.index,
                "amount": advice.fallback.amount,
            }
        _emit(record)
        return EXIT_OK
    print(advice.status)
    if advice.move is not None:
        print(f"move {_format_move(position, advice.move)}")
        print(f"target_sg {advice.target_sg}")
    elif advice.fallback is not None:
        print(f"fallback {_format_move(position, advice.fallback)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = oracle.verify_grid(args.dims, args.bound, cap=args.cap)
    except oracle.GridCapExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == FORMAT_MACHINE:
        for record in report.machine_records():
            _emit(record)
    else:
        print(report.summary())
    if args.plot:
        from . import plotting  # matplotlib import is slow; keep it off the hot path

        plotting.save_grid_figure(report, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_serve(args: argparse.Namespace) -> int:
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_BIND
    finally:
        probe.close()

    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return EXIT_OK


COMMANDS = {
    "sg": cmd_sg,
    "moves": cmd_moves,
    "best": cmd_best,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except core.InvalidPositionError as exc:
        parser.exit(EXIT_USAGE, f"error: {exc}\n")
        return EXIT_USAGE  # unreachable; parser.exit raises


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
