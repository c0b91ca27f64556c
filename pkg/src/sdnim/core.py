"""Position and move model for Single-delete Nim, plus bit-level primitives.

A position is a list of at least two piles, each holding at least one stone.
A move deletes one pile entirely and splits one of the remaining piles into
two nonempty piles, so the number of piles never changes. The player who
faces all-ones (no pile can be split) loses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

MAX_PILE = 2**64 - 1


class InvalidPositionError(ValueError):
    """Pile list is not a valid game position."""


class InvalidMoveError(ValueError):
    """Move is malformed or does not apply to the given position."""


def v2(z: int) -> int:
    """Exponent of the largest power of two dividing z (z >= 1)."""
    if z < 1:
        raise ValueError(f"v2 is undefined for {z}")
    return (z & -z).bit_length() - 1


def bit_at(z: int, k: int) -> int:
    """The k-th binary digit of z, counted 1-based from the right.

    Digits beyond the width of z are 0.
    """
    if k < 1:
        raise ValueError(f"digit index must be >= 1, got {k}")
    return (z >> (k - 1)) & 1


def bit_length(z: int) -> int:
    """Index of the highest set digit of z, 1-based (z >= 1)."""
    if z < 1:
        raise ValueError(f"bit_length requires z >= 1, got {z}")
    return z.bit_length()


def split_at_level(z: int, k: int) -> Tuple[int, int]:
    """Split z as (2**k, z - 2**k), the single-power-of-two split.

    Two validity regimes:
    * k < v2(z): both parts have valuation exactly k, because z / 2**k is
      even and so z - 2**k is an odd multiple of 2**k.
    * k > v2(z) with digit k+1 of z set: subtracting 2**k just clears that
      digit, so the larger part keeps the valuation of z.
    Anything else is rejected; in particular k = v2(z), which would move
    the low digit, and levels whose digit is absent.
    """
    if k < 0:
        raise ValueError(f"level must be non-negative, got {k}")
    low = v2(z)
    if k >= low and not (k > low and bit_at(z, k + 1) == 1):
        raise ValueError(f"cannot split {z} at level {k} (v2={low})")
    part = 1 << k
    return part, z - part


@dataclass(frozen=True)
class Position:
    """An ordered list of pile sizes. Immutable and hashable."""

    piles: Tuple[int, ...]

    def __post_init__(self) -> None:
        piles = tuple(self.piles)
        object.__setattr__(self, "piles", piles)
        if len(piles) < 2:
            raise InvalidPositionError("a position needs at least 2 piles")
        for p in piles:
            if not isinstance(p, int) or isinstance(p, bool):
                raise InvalidPositionError(f"pile sizes must be integers, got {p!r}")
            if p < 1:
                raise InvalidPositionError(f"every pile must hold at least 1 stone, got {p}")
            if p > MAX_PILE:
                raise InvalidPositionError(f"pile {p} exceeds the 64-bit limit")

    @classmethod
    def parse(cls, text: str) -> "Position":
        """Parse the comma-separated decimal format, e.g. "294,208,304,432"."""
        parts = [s.strip() for s in text.split(",")]
        try:
            piles = tuple(int(s, 10) for s in parts)
        except ValueError as exc:
            raise InvalidPositionError(f"cannot parse position {text!r}") from exc
        return cls(piles)

    def text(self) -> str:
        return ",".join(str(p) for p in self.piles)

    @property
    def n(self) -> int:
        return len(self.piles)

    @property
    def total(self) -> int:
        return sum(self.piles)

    def canonical(self) -> Tuple[int, ...]:
        """Value-sorted pile tuple; positions equal as multisets share it."""
        return tuple(sorted(self.piles))

    def __iter__(self):
        return iter(self.piles)

    def __str__(self) -> str:
        return "<" + self.text() + ">"


@dataclass(frozen=True)
class Move:
    """Delete the pile at delete_index, split the one at split_index into
    left + right stones. Splits are canonically oriented left <= right."""

    delete_index: int
    split_index: int
    left: int
    right: int

    def __post_init__(self) -> None:
        if self.delete_index < 0 or self.split_index < 0:
            raise InvalidMoveError("pile indices must be non-negative")
        if self.delete_index == self.split_index:
            raise InvalidMoveError("cannot delete and split the same pile")
        if self.left < 1 or self.right < 1:
            raise InvalidMoveError("both split parts need at least 1 stone")
        if self.left > self.right:
            raise InvalidMoveError("split parts must satisfy left <= right")


@dataclass(frozen=True)
class StandardForm:
    """A position reordered so the 2-adic valuations are non-decreasing.

    perm[i] is the index in the source position of the i-th standard pile.
    Ties in valuation are broken by pile value, then by original index.
    """

    piles: Tuple[int, ...]
    vals: Tuple[int, ...]
    perm: Tuple[int, ...]


def standardize(p: Position) -> StandardForm:
    order = sorted(range(p.n), key=lambda i: (v2(p.piles[i]), p.piles[i], i))
    piles = tuple(p.piles[i] for i in order)
    return StandardForm(piles=piles, vals=tuple(v2(q) for q in piles), perm=tuple(order))


def is_terminal(p: Position) -> bool:
    """True iff every pile holds a single stone, i.e. no move exists."""
    return all(q == 1 for q in p.piles)


def legal_moves(p: Position) -> List[Move]:
    """All canonical moves, ordered by delete index, split index, left part."""
    moves: List[Move] = []
    for i in range(p.n):
        for j in range(p.n):
            if j == i or p.piles[j] < 2:
                continue
            pile = p.piles[j]
            for s in range(1, pile // 2 + 1):
                moves.append(Move(i, j, s, pile - s))
    return moves


def apply_move(p: Position, m: Move) -> Position:
    """Apply a legal move. The split pile's slot keeps the larger part and
    the deleted pile's slot receives the smaller, so n is preserved."""
    if m.delete_index >= p.n or m.split_index >= p.n:
        raise InvalidMoveError(f"pile index out of range for {p}")
    if m.left + m.right != p.piles[m.split_index]:
        raise InvalidMoveError(
            f"split {m.left}+{m.right} does not sum to pile {p.piles[m.split_index]}"
        )
    piles = list(p.piles)
    piles[m.split_index] = m.right
    piles[m.delete_index] = m.left
    return Position(tuple(piles))


def binary_rows(piles: Iterable[int]) -> List[str]:
    """Right-aligned binary digit rows with a common width."""
    values = list(piles)
    width = max(v.bit_length() for v in values)
    return [format(v, "b").rjust(width, "0") for v in values]


def binary_rows_marked(piles: Iterable[int]) -> List[str]:
    """Binary rows with each pile's lowest set digit wrapped in brackets."""
    values = list(piles)
    rows = binary_rows(values)
    marked = []
    for value, row in zip(values, rows):
        idx = len(row) - 1 - v2(value)
        marked.append(row[:idx] + "[" + row[idx] + "]" + row[idx + 1 :])
    return marked
