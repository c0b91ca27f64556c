"""Command-line front end: sdnim <command>.

Exit codes: 0 success, 1 usage or input error, 2 verification found
mismatches. All JSON output is UTF-8 and newline-terminated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .classifier import Outcome, classify, position_report
from .core import InvalidPositionError, Position, binary_rows_marked
from .harness import enumerate_p_positions, play_session, verify
from .oracle import OracleBudgetError, solve_with_length
from .strategy import (
    DEFAULT_ENGINE_BUDGET,
    MoveAdvice,
    UnknownOutcomeError,
    constructive_move3,
    constructive_move4,
    winning_move,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this tool reserves 2 for
    # verification failures, so remap usage errors to 1.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_position_or_exit(text: str) -> Position:
    try:
        return Position.parse(text)
    except InvalidPositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _print_json(obj) -> None:
    print(json.dumps(obj))


def _print_position_table(pos: Position) -> None:
    rows = binary_rows_marked(pos.piles)
    width = max(len(str(q)) for q in pos.piles)
    for i, (pile, row) in enumerate(zip(pos.piles, rows), start=1):
        print(f"  #{i}  {str(pile).rjust(width)}  {row}")


def _cmd_classify(args) -> int:
    pos = _parse_position_or_exit(args.piles)
    outcome = classify(pos)
    report = position_report(pos)
    if args.json:
        _print_json({"piles": list(pos.piles), "outcome": outcome.value, "report": report})
        return EXIT_OK
    print(f"outcome: {outcome.value}")
    _print_position_table(pos)
    if pos.n == 4:
        print(f"pattern: {report['pattern']}  vals: {tuple(report['vals'])}")
        for label in sorted(report["conditions"]):
            state = "pass" if report["conditions"][label] else "fail"
            print(f"  {label}: {state}")
    elif pos.n == 3:
        print(f"vals: {tuple(report['vals'])}  equal: {'yes' if report['star'] else 'no'}")
    elif pos.n == 2:
        print(f"both odd: {'yes' if report['both_odd'] else 'no'}")
    else:
        print(f"family: {report['family'] or 'none known'}")
    return EXIT_OK


def _describe_advice(pos: Position, advice: MoveAdvice) -> str:
    m = advice.move
    label = advice.rule + (f" -> {advice.claimed_class}" if advice.claimed_class else "")
    return (
        f"delete pile #{m.delete_index + 1} ({pos.piles[m.delete_index]}), "
        f"split pile #{m.split_index + 1} ({pos.piles[m.split_index]}) into "
        f"{m.left}+{m.right}  =>  {advice.resulting.text()}  [{label}]"
    )


def _cmd_best_move(args) -> int:
    pos = _parse_position_or_exit(args.piles)
    try:
        if args.constructive and pos.n == 4:
            advice = constructive_move4(pos)
        elif args.constructive and pos.n == 3:
            advice = constructive_move3(pos)
        else:
            advice = winning_move(pos)
    except UnknownOutcomeError as exc:
        print(f"error: {exc} (try `sdnim oracle`)", file=sys.stderr)
        return EXIT_USAGE
    outcome = classify(pos)
    if args.json:
        _print_json(
            {
                "piles": list(pos.piles),
                "outcome": outcome.value,
                "advice": advice.to_json_dict() if advice else None,
            }
        )
        return EXIT_OK
    if advice is None:
        print(f"none: {pos.text()} is already lost for the mover")
    else:
        print(_describe_advice(pos, advice))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    try:
        positions = enumerate_p_positions(args.piles, args.max_sum)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        _print_json(
            {
                "n": args.piles,
                "max_sum": args.max_sum,
                "positions": [list(p.piles) for p in positions],
            }
        )
    else:
        print("piles,sum,outcome")
        for p in positions:
            print(f"{';'.join(str(q) for q in p.piles)},{p.total},P")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        report = verify(args.piles, args.max_sum)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print(
            f"n={report.n} max_sum={report.max_sum}: "
            f"{report.positions_checked} ordered positions checked "
            f"in {report.elapsed:.2f}s"
        )
        print(f"  oracle mismatches:        {len(report.mismatches)}")
        print(f"  closure violations:       {len(report.closure_violations)}")
        print(f"  reachability violations:  {len(report.reachability_violations)}")
        print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_oracle(args) -> int:
    pos = _parse_position_or_exit(args.piles)
    try:
        outcome, length = solve_with_length(pos)
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.length:
        print(f"{outcome.value} {length}")
    else:
        print(outcome.value)
    return EXIT_OK


def _cmd_play(args) -> int:
    pos = _parse_position_or_exit(args.start)
    try:
        play_session(pos, human_first=not args.engine_first, budget=args.budget)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EOFError, KeyboardInterrupt):
        print("\nsession ended", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def resolve_port(flag_port: Optional[int], env: Optional[str]) -> int:
    """The --port flag wins over SDNIM_PORT; default 8000."""
    if flag_port is not None:
        return flag_port
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"SDNIM_PORT must be an integer, got {env!r}") from exc
    return 8000


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    try:
        port = resolve_port(args.port, os.environ.get("SDNIM_PORT"))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    uvicorn.run(create_app(), host=args.host, port=port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sdnim", description="Single-delete Nim workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="closed-form outcome and diagnostics")
    p.add_argument("piles", help='comma-separated piles, e.g. "294,208,304,432"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("best-move", help="a winning move, if one exists")
    p.add_argument("piles")
    p.add_argument("--constructive", action="store_true",
                   help="use the closed-form rule cascade and report the rule label")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_best_move)

    p = sub.add_parser("enumerate", help="list all losing positions up to a sum bound")
    p.add_argument("--piles", type=int, required=True, choices=(2, 3, 4))
    p.add_argument("--max-sum", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="oracle equivalence, closure, reachability")
    p.add_argument("--piles", type=int, required=True, choices=(2, 3, 4))
    p.add_argument("--max-sum", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="ground-truth outcome by exhaustive search")
    p.add_argument("piles")
    p.add_argument("--length", action="store_true",
                   help="also print the optimal remaining move count")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("play", help="interactive game against the engine")
    p.add_argument("--start", default="3,5,8")
    p.add_argument("--engine-first", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_ENGINE_BUDGET,
                   help="stone total up to which the engine consults the oracle")
    p.set_defaults(func=_cmd_play)

    p = sub.add_parser("serve", help="launch the HTTP service")
    p.add_argument("--port", type=int, default=None,
                   help="defaults to SDNIM_PORT or 8000")
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
