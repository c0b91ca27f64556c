"""Closed-form win/loss classification for 2, 3, and 4 piles.

Two piles: the mover loses exactly when both piles are odd. Three piles:
exactly when all three 2-adic valuations coincide. Four piles: exactly when
the standardized valuation profile (a, b, c, d) and a set of binary-digit
sub-conditions labelled 2A through 5F land in one of five accepting cases.
For five or more piles only two families are decided (all piles odd, all
piles equal to two); everything else is reported as Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from .core import Position, bit_at, bit_length, standardize, v2


class Outcome(str, Enum):
    P = "P"
    N = "N"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


class Pattern(str, Enum):
    """Equality pattern of the sorted valuation profile (a, b, c, d).

    TRIANGLE collects the four shapes a=b=c<d, a=b<c=d, a=b<c<d and
    a<b=c<d, none of which can be a losing position for the opponent.
    """

    EQ4 = "EQ4"
    A_LT_B_EQ_C_EQ_D = "A_LT_B_EQ_C_EQ_D"
    A_LT_B_LT_C_EQ_D = "A_LT_B_LT_C_EQ_D"
    A_LT_B_LT_C_LT_D = "A_LT_B_LT_C_LT_D"
    TRIANGLE = "TRIANGLE"

    def __str__(self) -> str:
        return self.value


# Condition labels grouped by the pattern they apply to.
CONDITIONS_2 = ("2A",)
CONDITIONS_3 = ("3A", "3B", "3C")
CONDITIONS_4 = ("4A", "4B", "4C", "4D", "4E")
CONDITIONS_5 = ("5A", "5B", "5C", "5D", "5E", "5F")


@dataclass(frozen=True)
class ConditionReport:
    """Full diagnostics for a 4-pile position.

    vals is the sorted valuation profile. conditions holds exactly the
    sub-condition labels applicable to the pattern, nothing else.
    """

    vals: Tuple[int, int, int, int]
    pattern: Pattern
    conditions: Dict[str, bool] = field(default_factory=dict)
    outcome: Outcome = Outcome.N

    def p_class(self) -> Optional[str]:
        """Which accepting case (P1..P5) the position satisfies, if any."""
        if self.outcome is not Outcome.P:
            return None
        if self.pattern is Pattern.EQ4:
            return "P1"
        if self.pattern is Pattern.A_LT_B_EQ_C_EQ_D:
            return "P2"
        if self.pattern is Pattern.A_LT_B_LT_C_EQ_D:
            return "P3"
        if all(self.conditions[k] for k in CONDITIONS_4):
            return "P4"
        return "P5"

    def to_json_dict(self) -> dict:
        return {
            "pattern": self.pattern.value,
            "vals": list(self.vals),
            "conditions": dict(self.conditions),
            "outcome": self.outcome.value,
        }


def classify2(y: int, z: int) -> Outcome:
    """Two piles lose for the mover exactly when both are odd."""
    if y < 1 or z < 1:
        raise ValueError("piles must be positive")
    return Outcome.P if (y % 2 == 1 and z % 2 == 1) else Outcome.N


def classify3(p: Position) -> Outcome:
    """Three piles lose for the mover exactly when all valuations agree."""
    if p.n != 3:
        raise ValueError(f"classify3 needs 3 piles, got {p.n}")
    a, b, c = (v2(q) for q in p.piles)
    return Outcome.P if a == b == c else Outcome.N


def _pattern_of(vals: Tuple[int, int, int, int]) -> Pattern:
    a, b, c, d = vals
    if a == d:
        return Pattern.EQ4
    if a < b == c == d:
        return Pattern.A_LT_B_EQ_C_EQ_D
    if a < b < c == d:
        return Pattern.A_LT_B_LT_C_EQ_D
    if a < b < c < d:
        return Pattern.A_LT_B_LT_C_LT_D
    return Pattern.TRIANGLE


def diagnose4(p: Position) -> ConditionReport:
    """Evaluate the pattern and every applicable sub-condition for 4 piles.

    Range conditions over an empty digit range are vacuously true. The
    digit scan of 5A stops at the widest pile; all higher digit sums are 0,
    which the accepted set {0, 3, 4} contains.
    """
    if p.n != 4:
        raise ValueError(f"diagnose4 needs 4 piles, got {p.n}")
    sf = standardize(p)
    w, x, y, z = sf.piles
    a, b, c, d = sf.vals
    vals = (a, b, c, d)
    pattern = _pattern_of(vals)
    conditions: Dict[str, bool] = {}

    if pattern is Pattern.EQ4:
        outcome = Outcome.P
    elif pattern is Pattern.TRIANGLE:
        outcome = Outcome.N
    elif pattern is Pattern.A_LT_B_EQ_C_EQ_D:
        conditions["2A"] = bit_at(w, b + 1) == 0
        outcome = Outcome.P if conditions["2A"] else Outcome.N
    elif pattern is Pattern.A_LT_B_LT_C_EQ_D:
        conditions["3A"] = bit_at(w, c + 1) == 0 and bit_at(x, c + 1) == 0
        conditions["3B"] = all(
            bit_at(w, k) + bit_at(x, k) >= 1 for k in range(b + 2, c + 1)
        )
        conditions["3C"] = bit_at(w, b + 1) == 1
        outcome = Outcome.P if all(conditions[k] for k in CONDITIONS_3) else Outcome.N
    else:
        conditions["4A"] = (
            bit_at(w, d + 1) == 0 and bit_at(x, d + 1) == 0 and bit_at(y, d + 1) == 0
        )
        conditions["4B"] = all(
            bit_at(w, j) + bit_at(x, j) + bit_at(y, j) >= 2 for j in range(c + 2, d + 1)
        )
        conditions["4C"] = bit_at(w, c + 1) == 1 and bit_at(x, c + 1) == 1
        conditions["4D"] = all(
            bit_at(w, k) + bit_at(x, k) >= 1 for k in range(b + 2, c + 1)
        )
        conditions["4E"] = bit_at(w, b + 1) == 1
        top = max(bit_length(q) for q in sf.piles)
        conditions["5A"] = all(
            bit_at(w, i) + bit_at(x, i) + bit_at(y, i) + bit_at(z, i) in (0, 3, 4)
            for i in range(d + 2, top + 1)
        )
        conditions["5B"] = (
            bit_at(w, d + 1) == 1 and bit_at(x, d + 1) == 1 and bit_at(y, d + 1) == 1
        )
        conditions["5C"] = conditions["4B"]
        conditions["5D"] = conditions["4C"]
        conditions["5E"] = conditions["4D"]
        conditions["5F"] = conditions["4E"]
        p4 = all(conditions[k] for k in CONDITIONS_4)
        p5 = all(conditions[k] for k in CONDITIONS_5)
        outcome = Outcome.P if (p4 or p5) else Outcome.N

    return ConditionReport(vals=vals, pattern=pattern, conditions=conditions, outcome=outcome)


def classify4(p: Position) -> Outcome:
    return diagnose4(p).outcome


def family_outcome(p: Position) -> Outcome:
    """Decide the two known families for any pile count, else Unknown.

    All piles odd is always a loss for the mover. All piles equal to two is
    a win for the mover exactly when n mod 3 == 2.
    """
    if all(q % 2 == 1 for q in p.piles):
        return Outcome.P
    if all(q == 2 for q in p.piles):
        return Outcome.N if p.n % 3 == 2 else Outcome.P
    return Outcome.UNKNOWN


def classify(p: Position) -> Outcome:
    """Exact outcome for n in {2, 3, 4}; family answer or Unknown beyond."""
    if p.n == 2:
        return classify2(*p.piles)
    if p.n == 3:
        return classify3(p)
    if p.n == 4:
        return classify4(p)
    return family_outcome(p)


def position_report(p: Position) -> dict:
    """Human-oriented report dict used by the CLI and the HTTP service."""
    if p.n == 2:
        y, z = p.piles
        return {
            "both_odd": y % 2 == 1 and z % 2 == 1,
            "outcome": classify2(y, z).value,
        }
    if p.n == 3:
        vals = [v2(q) for q in p.piles]
        return {
            "star": vals[0] == vals[1] == vals[2],
            "vals": vals,
            "outcome": classify3(p).value,
        }
    if p.n == 4:
        return diagnose4(p).to_json_dict()
    outcome = family_outcome(p)
    if all(q % 2 == 1 for q in p.piles):
        family: Optional[str] = "all_odd"
    elif all(q == 2 for q in p.piles):
        family = "all_twos"
    else:
        family = None
    return {"family": family, "outcome": outcome.value}
