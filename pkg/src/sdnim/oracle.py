"""Ground-truth brute-force solver via memoized exhaustive move expansion.

Positions are canonicalized to value-sorted tuples; the rules are symmetric
under pile order, so one memo entry covers all permutations. Termination is
guaranteed because every move strictly decreases the total stone count.
Besides the win/loss outcome the solver records the optimal game length:
the winner shortens the game, the loser drags it out.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from .classifier import Outcome, classify
from .core import Position

Piles = Tuple[int, ...]

DEFAULT_NODE_BUDGET = 10_000_000


class OracleBudgetError(RuntimeError):
    """Memo table grew past node_budget; shrink the instance instead."""

    def __init__(self, position: Piles, budget: int):
        super().__init__(f"oracle budget of {budget} entries exceeded at {position}")
        self.position = position
        self.budget = budget


@dataclass
class OracleTable:
    """Memo of canonical positions to (is_p, optimal remaining length)."""

    node_budget: int = DEFAULT_NODE_BUDGET
    memo: Dict[Piles, Tuple[bool, int]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.memo)


def children(t: Piles) -> Iterator[Piles]:
    """Canonical child multisets of a canonical position, deduplicated."""
    n = len(t)
    seen = set()
    for j in range(n):
        pile = t[j]
        if pile < 2 or (j > 0 and t[j] == t[j - 1]):
            continue
        rest = t[:j] + t[j + 1 :]
        for i in range(n - 1):
            if i > 0 and rest[i] == rest[i - 1]:
                continue
            kept = rest[:i] + rest[i + 1 :]
            for s in range(1, pile // 2 + 1):
                child = tuple(sorted(kept + (s, pile - s)))
                if child not in seen:
                    seen.add(child)
                    yield child


def _solve(t: Piles, memo: Dict[Piles, Tuple[bool, int]], budget: int) -> Tuple[bool, int]:
    hit = memo.get(t)
    if hit is not None:
        return hit
    if all(q == 1 for q in t):
        result = (True, 0)
    else:
        any_p = False
        best_p_len = 0
        max_len = 0
        for child in children(t):
            child_p, child_len = _solve(child, memo, budget)
            if child_p:
                if not any_p or child_len < best_p_len:
                    best_p_len = child_len
                any_p = True
            if child_len > max_len:
                max_len = child_len
        # A losing position's children are all wins for the opponent, so the
        # loser maximizes over every child; a winner takes the shortest reply.
        result = (False, 1 + best_p_len) if any_p else (True, 1 + max_len)
    if len(memo) >= budget:
        raise OracleBudgetError(t, budget)
    memo[t] = result
    return result


def _ensure_recursion_room(total: int) -> None:
    # Depth is bounded by the total stone count, one frame per ply.
    need = total + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def solve(p: Position, table: Optional[OracleTable] = None) -> Outcome:
    """Exact outcome of a position by exhaustive expansion."""
    outcome, _ = solve_with_length(p, table)
    return outcome


def solve_with_length(p: Position, table: Optional[OracleTable] = None) -> Tuple[Outcome, int]:
    """Exact outcome plus the optimal number of remaining moves."""
    table = table if table is not None else OracleTable()
    _ensure_recursion_room(p.total)
    is_p, length = _solve(p.canonical(), table.memo, table.node_budget)
    return (Outcome.P if is_p else Outcome.N), length


def canonical_positions(n: int, max_sum: int) -> Iterator[Piles]:
    """All value-sorted n-pile multisets with total at most max_sum,
    in ascending lexicographic order."""
    if n < 2:
        raise ValueError("need at least 2 piles")
    if max_sum < n:
        return

    def rec(prefix: Piles, lo: int, budget: int, k: int) -> Iterator[Piles]:
        if k == 0:
            yield prefix
            return
        for val in range(lo, budget - (k - 1) + 1):
            yield from rec(prefix + (val,), val, budget - val, k - 1)

    yield from rec((), 1, max_sum, n)


def sweep(
    n: int, max_sum: int, table: Optional[OracleTable] = None
) -> List[Tuple[Piles, Outcome]]:
    """Solve every n-pile multiset with total at most max_sum."""
    table = table if table is not None else OracleTable()
    out = []
    for t in canonical_positions(n, max_sum):
        out.append((t, solve(Position(t), table)))
    return out


class Mismatch(NamedTuple):
    piles: Piles
    oracle: Outcome
    classifier: Outcome


def compare_with_classifier(
    n: int, max_sum: int, table: Optional[OracleTable] = None
) -> List[Mismatch]:
    """Every swept position where the closed form and the oracle disagree."""
    if n not in (2, 3, 4):
        raise ValueError(f"closed forms exist for 2..4 piles, got {n}")
    table = table if table is not None else OracleTable()
    mismatches = []
    for t, truth in sweep(n, max_sum, table):
        predicted = classify(Position(t))
        if predicted is not truth:
            mismatches.append(Mismatch(t, truth, predicted))
    return mismatches


def sweep_csv(n: int, max_sum: int, table: Optional[OracleTable] = None) -> str:
    """CSV export of a sweep: piles (semicolon-joined), sum, outcome, length."""
    table = table if table is not None else OracleTable()
    lines = ["piles,sum,outcome,length"]
    for t in canonical_positions(n, max_sum):
        outcome, length = solve_with_length(Position(t), table)
        lines.append(f"{';'.join(map(str, t))},{sum(t)},{outcome.value},{length}")
    return "\n".join(lines) + "\n"
