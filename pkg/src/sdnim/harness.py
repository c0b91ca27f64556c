"""Verification sweeps, P-position enumeration, and game running.

``verify`` materializes the three checks the closed forms must survive:
oracle equivalence, closure (no move from a lost position reaches another
lost-for-the-opponent position), and reachability (every winnable position
has a move to a lost one). ``run_game``/``play_session`` drive complete
games between the engine and an arbitrary opponent.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Callable, List, Optional, Tuple

from .classifier import Outcome, classify
from .core import (
    InvalidMoveError,
    Move,
    Position,
    apply_move,
    binary_rows_marked,
    is_terminal,
    legal_moves,
)
from .oracle import (
    Mismatch,
    OracleTable,
    canonical_positions,
    compare_with_classifier,
)
from .strategy import DEFAULT_ENGINE_BUDGET, engine_move

Piles = Tuple[int, ...]


def enumerate_p_positions(n: int, max_sum: int) -> List[Position]:
    """All classifier-P multisets with the given pile count and sum bound,
    in ascending canonical order."""
    if n not in (2, 3, 4):
        raise ValueError(f"closed forms exist for 2..4 piles, got {n}")
    return [
        Position(t)
        for t in canonical_positions(n, max_sum)
        if classify(Position(t)) is Outcome.P
    ]


def _ordered_count(t: Piles) -> int:
    # Number of distinct orderings of the multiset.
    total = factorial(len(t))
    for repeats in Counter(t).values():
        total //= factorial(repeats)
    return total


@dataclass
class VerificationReport:
    n: int
    max_sum: int
    positions_checked: int
    mismatches: List[Mismatch]
    closure_violations: List[Tuple[Piles, Move]]
    reachability_violations: List[Piles]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not (
            self.mismatches or self.closure_violations or self.reachability_violations
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "max_sum": self.max_sum,
            "positions_checked": self.positions_checked,
            "mismatches": [
                {"piles": list(m.piles), "oracle": m.oracle.value, "classifier": m.classifier.value}
                for m in self.mismatches
            ],
            "closure_violations": [
                {"piles": list(t), "move": [m.delete_index, m.split_index, m.left, m.right]}
                for t, m in self.closure_violations
            ],
            "reachability_violations": [list(t) for t in self.reachability_violations],
            "elapsed": self.elapsed,
            "passed": self.passed,
        }


def verify(n: int, max_sum: int, table: Optional[OracleTable] = None) -> VerificationReport:
    """Run the oracle-equivalence, closure, and reachability checks."""
    if n not in (2, 3, 4):
        raise ValueError(f"closed forms exist for 2..4 piles, got {n}")
    started = time.perf_counter()
    table = table if table is not None else OracleTable()
    mismatches = compare_with_classifier(n, max_sum, table)
    closure: List[Tuple[Piles, Move]] = []
    reachability: List[Piles] = []
    checked = 0
    for t in canonical_positions(n, max_sum):
        checked += _ordered_count(t)
        pos = Position(t)
        if classify(pos) is Outcome.P:
            for m in legal_moves(pos):
                if classify(apply_move(pos, m)) is Outcome.P:
                    closure.append((t, m))
        else:
            if not any(
                classify(apply_move(pos, m)) is Outcome.P for m in legal_moves(pos)
            ):
                reachability.append(t)
    return VerificationReport(
        n=n,
        max_sum=max_sum,
        positions_checked=checked,
        mismatches=mismatches,
        closure_violations=closure,
        reachability_violations=reachability,
        elapsed=time.perf_counter() - started,
    )


@dataclass(frozen=True)
class TranscriptEntry:
    position: Position
    move: Move
    mover: str


@dataclass
class Transcript:
    start: Position
    entries: List[TranscriptEntry]
    final: Position
    winner: str
    loser: str

    def to_json_dict(self) -> dict:
        return {
            "start": list(self.start.piles),
            "moves": [
                {
                    "mover": e.mover,
                    "position": list(e.position.piles),
                    "move": [e.move.delete_index, e.move.split_index, e.move.left, e.move.right],
                }
                for e in self.entries
            ],
            "final": list(self.final.piles),
            "winner": self.winner,
            "loser": self.loser,
        }


Chooser = Callable[[Position], Move]


def engine_chooser(budget: int = DEFAULT_ENGINE_BUDGET, table: Optional[OracleTable] = None) -> Chooser:
    shared = table if table is not None else OracleTable()

    def choose(p: Position) -> Move:
        return engine_move(p, budget=budget, table=shared).move

    return choose


def random_chooser(seed: int) -> Chooser:
    rng = random.Random(seed)

    def choose(p: Position) -> Move:
        return rng.choice(legal_moves(p))

    return choose


def run_game(start: Position, movers: Tuple[str, str], choosers: dict) -> Transcript:
    """Alternate the two movers from ``start`` until someone faces all ones.

    ``movers[0]`` moves first; the player on turn at the terminal position
    loses. Ends in finitely many plies because the stone total shrinks.
    """
    if is_terminal(start):
        raise ValueError(f"{start} is terminal, nobody can move")
    pos = start
    entries: List[TranscriptEntry] = []
    ply = 0
    while not is_terminal(pos):
        name = movers[ply % 2]
        move = choosers[name](pos)
        entries.append(TranscriptEntry(pos, move, name))
        pos = apply_move(pos, move)
        ply += 1
    loser = movers[ply % 2]
    winner = movers[(ply + 1) % 2]
    return Transcript(start=start, entries=entries, final=pos, winner=winner, loser=loser)


def _format_position(p: Position) -> str:
    rows = binary_rows_marked(p.piles)
    width = max(len(str(q)) for q in p.piles)
    lines = []
    for i, (pile, row) in enumerate(zip(p.piles, rows), start=1):
        lines.append(f"  #{i}  {str(pile).rjust(width)}  {row}")
    return "\n".join(lines)


def _prompt_int(prompt: str, input_fn, print_fn) -> Optional[int]:
    raw = input_fn(prompt)
    try:
        return int(raw.strip())
    except (ValueError, AttributeError):
        print_fn("please enter a number")
        return None


def human_chooser(input_fn=input, print_fn=print) -> Chooser:
    """Interactive chooser: prompts for delete pile, split pile, and split
    amount (1-based pile numbers), re-prompting until the move is legal."""

    def choose(p: Position) -> Move:
        legal = set(legal_moves(p))
        while True:
            delete = _prompt_int("pile to delete (#): ", input_fn, print_fn)
            if delete is None:
                continue
            split = _prompt_int("pile to split (#): ", input_fn, print_fn)
            if split is None:
                continue
            amount = _prompt_int("stones in one of the new piles: ", input_fn, print_fn)
            if amount is None:
                continue
            if not (1 <= delete <= p.n and 1 <= split <= p.n):
                print_fn("pile numbers are 1-based and must exist")
                continue
            pile = p.piles[split - 1]
            left, right = min(amount, pile - amount), max(amount, pile - amount)
            try:
                move = Move(delete - 1, split - 1, left, right)
            except InvalidMoveError as exc:
                print_fn(f"illegal move: {exc}")
                continue
            if move not in legal:
                print_fn("illegal move, try again")
                continue
            return move

    return choose


def play_session(
    start: Position,
    human_first: bool,
    budget: int = DEFAULT_ENGINE_BUDGET,
    input_fn=input,
    print_fn=print,
) -> Transcript:
    """Interactive terminal game between a human and the engine."""
    if is_terminal(start):
        raise ValueError(f"{start} is terminal, nothing to play")
    movers = ("human", "engine") if human_first else ("engine", "human")
    table = OracleTable()
    human = human_chooser(input_fn=input_fn, print_fn=print_fn)

    def narrated_engine(p: Position) -> Move:
        advice = engine_move(p, budget=budget, table=table)
        label = f" [{advice.rule}" + (
            f" -> {advice.claimed_class}]" if advice.claimed_class else "]"
        )
        print_fn(
            f"engine deletes pile #{advice.move.delete_index + 1} and splits "
            f"pile #{advice.move.split_index + 1} into "
            f"{advice.move.left}+{advice.move.right}{label}"
        )
        return advice.move

    def narrated_human(p: Position) -> Move:
        print_fn("your turn:")
        print_fn(_format_position(p))
        return human(p)

    choosers = {"engine": narrated_engine, "human": narrated_human}
    print_fn(f"starting position {start}")
    transcript = run_game(start, movers, choosers)
    print_fn(_format_position(transcript.final))
    print_fn(f"{transcript.loser} faces all ones and loses; {transcript.winner} wins")
    return transcript
