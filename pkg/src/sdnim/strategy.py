"""Winning-move production and engine move selection.

Three routes to a move:

* ``winning_move``: generic classifier-guided scan in canonical move order.
* ``constructive_move3`` / ``constructive_move4``: closed-form rules that
  name the pile to delete and split off a single power of two. The 4-pile
  rules form an ordered cascade keyed to which sub-condition fails; every
  produced move is post-checked against the classifier and the cascade
  falls back to the generic scan if a rule misfires.
* ``engine_move``: what the play surfaces call. Wins when the position is
  winnable, otherwise plays the move that drags the game out the longest
  (oracle-scored when the position is small enough).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from .classifier import Outcome, Pattern, classify, classify3, classify4, diagnose4
from .core import (
    Move,
    Position,
    StandardForm,
    apply_move,
    bit_at,
    bit_length,
    is_terminal,
    legal_moves,
    split_at_level,
    standardize,
)
from .oracle import OracleTable, solve, solve_with_length

logger = logging.getLogger(__name__)

DEFAULT_ENGINE_BUDGET = 64


class UnknownOutcomeError(ValueError):
    """Position has no exact classification; callers may try the oracle."""


class TerminalPositionError(ValueError):
    """No move exists from an all-ones position."""


@dataclass(frozen=True)
class MoveAdvice:
    move: Move
    resulting: Position
    claimed_class: Optional[str]
    rule: str

    def to_json_dict(self) -> dict:
        return {
            "delete_index": self.move.delete_index,
            "split_index": self.move.split_index,
            "left": self.move.left,
            "right": self.move.right,
            "resulting": list(self.resulting.piles),
            "rule": self.rule,
            "claimed_class": self.claimed_class,
        }


def _claimed_class(r: Position) -> Optional[str]:
    if classify(r) is not Outcome.P:
        return None
    if r.n == 2:
        return "BOTH_ODD"
    if r.n == 3:
        return "STAR"
    if r.n == 4:
        return diagnose4(r).p_class()
    return None


def winning_move(p: Position) -> Optional[MoveAdvice]:
    """First canonical move whose result classifies as a loss for the
    opponent; None when the position itself is already lost."""
    outcome = classify(p)
    if outcome is Outcome.UNKNOWN:
        raise UnknownOutcomeError(f"no exact classification for {p}")
    if outcome is Outcome.P:
        return None
    for m in legal_moves(p):
        r = apply_move(p, m)
        if classify(r) is Outcome.P:
            return MoveAdvice(m, r, _claimed_class(r), "search")
    return None


def constructive_move3(p: Position) -> Optional[MoveAdvice]:
    """Keep the pile of least valuation, delete the middle one, and split
    the last so both parts match the least valuation."""
    if p.n != 3:
        raise ValueError(f"constructive_move3 needs 3 piles, got {p.n}")
    sf = standardize(p)
    if sf.vals[0] == sf.vals[2]:
        return None
    left, right = split_at_level(sf.piles[2], sf.vals[0])
    m = Move(delete_index=sf.perm[1], split_index=sf.perm[2], left=left, right=right)
    return MoveAdvice(m, apply_move(p, m), "STAR", "star-split")


# Cascade candidates are (split_sf, delete_sf, level, rule, claimed_class):
# split the standard-form pile split_sf into (2**level, pile - 2**level)
# and delete the standard-form pile delete_sf.
Candidate = Tuple[int, int, int, str, str]


def _triangle_candidate(vals: Tuple[int, int, int, int]) -> Candidate:
    a, b, c, d = vals
    if a == b == c:
        return (3, 2, a, "3.2-a", "P1")
    if a == b and c == d:
        return (3, 2, a, "3.2-a", "P1")
    if a == b:
        return (2, 3, a, "3.2-a", "P1")
    return (3, 0, b, "3.2-a", "P1")


def _first_level_with_pair_zero(w: int, x: int, lo: int, hi: int) -> Optional[int]:
    # Smallest level k with lo < k < hi whose digit k+1 is 0 in both piles.
    for k in range(lo + 1, hi):
        if bit_at(w, k + 1) == 0 and bit_at(x, k + 1) == 0:
            return k
    return None


def _cascade_candidate(sf: StandardForm, conditions: dict) -> Optional[Candidate]:
    w, x, y, z = sf.piles
    a, b, c, d = sf.vals

    if a == d:
        return None  # all equal is a lost position, no rule applies
    if a < b == c == d:
        # the lone failing condition here is 2A
        return (0, 1, b, "3.2-b", "P2")
    if a < b < c == d:
        if not conditions["3A"]:
            if bit_at(w, c + 1) == 1:
                return (0, 1, c, "3.2-c1", "P2")
            return (1, 0, c, "3.2-c2", "P2")
        if not conditions["3C"]:
            return (3, 2, b, "3.2-c3", "P2")
        if not conditions["3B"]:
            k = _first_level_with_pair_zero(w, x, b, c)
            if k is not None:
                return (3, 2, k, "3.2-c4", "P3")
        return None
    if not (a < b < c < d):
        return _triangle_candidate(sf.vals)

    # Strict profile: walk the failing conditions from the low digits up.
    if not conditions["4E"]:
        return (2, 3, b, "3.2-d1", "P2")
    if not conditions["4D"]:
        k = _first_level_with_pair_zero(w, x, b, c)
        if k is not None:
            return (2, 3, k, "3.2-d2", "P3")
        return None
    if not conditions["4C"]:
        if bit_at(w, c + 1) == 0:
            return (3, 1, c, "3.2-d3", "P2")
        return (3, 0, c, "3.2-d3", "P2")
    if not conditions["4B"]:
        for k in range(c + 1, d):
            zeros = [i for i in (0, 1, 2) if bit_at(sf.piles[i], k + 1) == 0]
            if len(zeros) >= 2:
                delete_sf = ({0, 1, 2} - set(zeros[:2])).pop()
                return (3, delete_sf, k, "3.2-d4", "P3")
        return None
    digit_sum = bit_at(w, d + 1) + bit_at(x, d + 1) + bit_at(y, d + 1)
    if 1 <= digit_sum <= 2:
        split_sf = next(i for i in (0, 1, 2) if bit_at(sf.piles[i], d + 1) == 1)
        kept = next(
            i for i in (0, 1, 2) if i != split_sf and bit_at(sf.piles[i], d + 1) == 0
        )
        delete_sf = ({0, 1, 2} - {split_sf, kept}).pop()
        return (split_sf, delete_sf, d, "3.2-e", "P3")
    if digit_sum == 3 and not conditions["5A"]:
        top = max(bit_length(q) for q in sf.piles)
        for k in range(d + 1, top + 1):
            col = [bit_at(sf.piles[i], k + 1) for i in range(4)]
            if sum(col) in (1, 2):
                for split_sf in (3, 2, 1, 0):
                    if col[split_sf] != 1:
                        continue
                    others = [i for i in range(4) if i != split_sf]
                    zeros = [i for i in others if col[i] == 0]
                    if len(zeros) < 2:
                        continue
                    delete_sf = next(i for i in others if i not in zeros[:2])
                    return (split_sf, delete_sf, k, "3.2-h", "P4")
                break
    return None


def _build_advice(p: Position, sf: StandardForm, cand: Candidate) -> Optional[MoveAdvice]:
    split_sf, delete_sf, level, rule, claimed = cand
    try:
        part, rest = split_at_level(sf.piles[split_sf], level)
    except ValueError:
        return None
    left, right = min(part, rest), max(part, rest)
    m = Move(
        delete_index=sf.perm[delete_sf],
        split_index=sf.perm[split_sf],
        left=left,
        right=right,
    )
    return MoveAdvice(m, apply_move(p, m), claimed, rule)


def constructive_move4(p: Position) -> Optional[MoveAdvice]:
    """Apply the first matching rule of the 4-pile cascade; None for lost
    positions. A rule only counts as fired when its result passes the
    classifier, otherwise the generic scan takes over as rule "search"."""
    if p.n != 4:
        raise ValueError(f"constructive_move4 needs 4 piles, got {p.n}")
    report = diagnose4(p)
    if report.outcome is Outcome.P:
        return None
    sf = standardize(p)
    cand = _cascade_candidate(sf, report.conditions)
    if cand is not None:
        advice = _build_advice(p, sf, cand)
        if advice is not None and classify4(advice.resulting) is Outcome.P:
            return advice
        logger.warning("cascade rule %s misfired at %s, falling back to search",
                       cand[3], p)
    else:
        logger.warning("no cascade rule matched at %s, falling back to search", p)
    return winning_move(p)


def engine_move(
    p: Position,
    budget: int = DEFAULT_ENGINE_BUDGET,
    table: Optional[OracleTable] = None,
) -> MoveAdvice:
    """Deterministic move for either side.

    Winnable positions get a winning move (constructive where a closed form
    exists, oracle-guided otherwise). Lost positions get the reply that
    maximizes the opponent's remaining work when the total stone count fits
    the oracle budget, else the canonical first legal move.
    """
    if is_terminal(p):
        raise TerminalPositionError(f"{p} is terminal")
    table = table if table is not None else OracleTable()
    use_oracle = p.total <= budget
    truth = solve(p, table) if use_oracle else classify(p)

    if truth is Outcome.N:
        advice: Optional[MoveAdvice] = None
        if p.n == 4 and classify4(p) is Outcome.N:
            advice = constructive_move4(p)
        elif p.n == 3 and classify3(p) is Outcome.N:
            advice = constructive_move3(p)
        elif p.n == 2:
            advice = winning_move(p)
        if advice is None and use_oracle:
            for m in legal_moves(p):
                r = apply_move(p, m)
                if solve(r, table) is Outcome.P:
                    advice = MoveAdvice(m, r, _claimed_class(r), "oracle")
                    break
        if advice is not None:
            return advice

    if use_oracle:
        best: Optional[MoveAdvice] = None
        best_len = -1
        for m in legal_moves(p):
            r = apply_move(p, m)
            _, length = solve_with_length(r, table)
            if length > best_len:
                best = MoveAdvice(m, r, _claimed_class(r), "delay")
                best_len = length
        assert best is not None
        return best
    m = legal_moves(p)[0]
    r = apply_move(p, m)
    return MoveAdvice(m, r, _claimed_class(r), "first")
