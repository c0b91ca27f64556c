"""Tests for the position/move model and bit-level primitives."""

import pytest

from sdnim.core import (
    InvalidMoveError,
    InvalidPositionError,
    Move,
    Position,
    apply_move,
    binary_rows,
    binary_rows_marked,
    bit_at,
    bit_length,
    is_terminal,
    legal_moves,
    split_at_level,
    standardize,
    v2,
)


class TestV2:
    @pytest.mark.parametrize("z,expected", [(1440, 5), (1, 0), (13312, 10), (3, 0), (64, 6)])
    def test_values(self, z, expected):
        assert v2(z) == expected

    @pytest.mark.parametrize("z", [0, -1, -64])
    def test_rejects_nonpositive(self, z):
        with pytest.raises(ValueError):
            v2(z)


class TestBitAt:
    @pytest.mark.parametrize("z,k,expected", [(294, 2, 1), (294, 5, 0), (294, 20, 0), (1, 1, 1)])
    def test_values(self, z, k, expected):
        assert bit_at(z, k) == expected

    def test_rejects_zero_index(self):
        with pytest.raises(ValueError):
            bit_at(294, 0)

    def test_consistency_with_v2(self):
        # The valuation is one below the lowest set digit index.
        for z in range(1, 2**16 + 1):
            lowest = next(k for k in range(1, 18) if bit_at(z, k) == 1)
            assert v2(z) == lowest - 1


class TestBitLength:
    @pytest.mark.parametrize("z,expected", [(1440, 11), (1, 1), (64512, 16)])
    def test_values(self, z, expected):
        assert bit_length(z) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            bit_length(0)


class TestSplitAtLevel:
    @pytest.mark.parametrize(
        "z,k,expected",
        [(8, 0, (1, 7)), (800, 4, (16, 784)), (64512, 12, (4096, 60416))],
    )
    def test_values(self, z, k, expected):
        assert split_at_level(z, k) == expected

    def test_rejects_level_at_valuation_or_absent_digit(self):
        with pytest.raises(ValueError):
            split_at_level(8, 3)
        with pytest.raises(ValueError):
            split_at_level(8, 5)
        with pytest.raises(ValueError):
            split_at_level(7, 0)
        with pytest.raises(ValueError):
            split_at_level(800, -1)

    def test_clearing_split_above_valuation(self):
        # Levels above the valuation are valid exactly when the digit is
        # set; the big part then keeps the original valuation.
        assert split_at_level(310, 4) == (16, 294)
        assert v2(294) == v2(310)
        with pytest.raises(ValueError):
            split_at_level(310, 6)

    def test_parts_have_exact_valuation(self):
        for z in range(2, 2**10 + 1):
            for k in range(v2(z)):
                a, b = split_at_level(z, k)
                assert a + b == z
                assert v2(a) == k
                assert v2(b) == k


class TestPosition:
    def test_parse_round_trip(self):
        p = Position.parse("294, 208,304,432")
        assert p.piles == (294, 208, 304, 432)
        assert p.text() == "294,208,304,432"
        assert p.n == 4
        assert p.total == 1238

    @pytest.mark.parametrize("text", ["0,4", "-1,3", "5", "", "a,b", "1,,2"])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidPositionError):
            Position.parse(text)

    def test_rejects_oversized_pile(self):
        with pytest.raises(InvalidPositionError):
            Position((2**64, 1))

    def test_accepts_max_pile(self):
        Position((2**64 - 1, 1))

    def test_canonical_sorts_values(self):
        assert Position((3, 1, 2)).canonical() == (1, 2, 3)


class TestStandardize:
    def test_mixed_ties(self):
        sf = standardize(Position((304, 294, 432, 208)))
        assert sf.piles == (294, 208, 304, 432)
        assert sf.vals == (1, 4, 4, 4)

    def test_all_ones(self):
        sf = standardize(Position((1, 1, 1, 1)))
        assert sf.piles == (1, 1, 1, 1)
        assert sf.vals == (0, 0, 0, 0)
        assert sf.perm == (0, 1, 2, 3)

    def test_tie_broken_by_value(self):
        sf = standardize(Position((669, 468, 800, 288)))
        assert sf.piles == (669, 468, 288, 800)
        assert sf.vals == (0, 2, 5, 5)

    def test_perm_maps_back(self):
        p = Position((12, 7, 40, 6))
        sf = standardize(p)
        assert tuple(p.piles[i] for i in sf.perm) == sf.piles
        assert sorted(sf.perm) == [0, 1, 2, 3]
        assert list(sf.vals) == sorted(sf.vals)


class TestLegalMoves:
    def test_terminal_has_none(self):
        assert legal_moves(Position((1, 1))) == []
        assert legal_moves(Position((1, 1, 1, 1))) == []

    def test_single_splittable_pile(self):
        moves = legal_moves(Position((1, 1, 1, 2)))
        assert len(moves) == 3
        assert {m.delete_index for m in moves} == {0, 1, 2}
        assert all(m.split_index == 3 and (m.left, m.right) == (1, 1) for m in moves)

    def test_canonical_count_4_3(self):
        moves = legal_moves(Position((4, 3)))
        assert moves == [
            Move(0, 1, 1, 2),
            Move(1, 0, 1, 3),
            Move(1, 0, 2, 2),
        ]

    def test_empty_iff_terminal(self):
        for piles in [(1, 1), (1, 2), (2, 2), (1, 1, 1), (1, 1, 2), (3, 1, 1, 1)]:
            p = Position(piles)
            assert (legal_moves(p) == []) == is_terminal(p)

    def test_canonical_order(self):
        moves = legal_moves(Position((2, 3, 2)))
        keys = [(m.delete_index, m.split_index, m.left) for m in moves]
        assert keys == sorted(keys)


class TestApplyMove:
    def test_two_pile_example(self):
        p = apply_move(Position((4, 3)), Move(1, 0, 1, 3))
        assert p.piles == (3, 1)

    def test_four_pile_example(self):
        p = apply_move(Position((310, 208, 304, 432)), Move(1, 0, 16, 294))
        assert p.piles == (294, 16, 304, 432)

    def test_to_terminal(self):
        p = apply_move(Position((1, 1, 1, 2)), Move(0, 3, 1, 1))
        assert p.piles == (1, 1, 1, 1)

    def test_preserves_n_and_reduces_sum(self):
        p = Position((5, 9, 12))
        for m in legal_moves(p):
            r = apply_move(p, m)
            assert r.n == p.n
            assert p.total - r.total == p.piles[m.delete_index]

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidMoveError):
            apply_move(Position((4, 3)), Move(0, 2, 1, 2))

    def test_rejects_delete_equals_split(self):
        with pytest.raises(InvalidMoveError):
            Move(1, 1, 1, 2)

    def test_rejects_bad_sum(self):
        with pytest.raises(InvalidMoveError):
            apply_move(Position((4, 3)), Move(1, 0, 1, 2))

    def test_rejects_zero_part(self):
        with pytest.raises(InvalidMoveError):
            Move(0, 1, 0, 3)

    def test_rejects_uncanonical_orientation(self):
        with pytest.raises(InvalidMoveError):
            Move(0, 1, 3, 1)


class TestIsTerminal:
    @pytest.mark.parametrize(
        "piles,expected",
        [((1, 1, 1, 1), True), ((1, 1), True), ((1, 1, 1, 2), False), ((2, 2), False)],
    )
    def test_values(self, piles, expected):
        assert is_terminal(Position(piles)) is expected


class TestBinaryRows:
    def test_right_aligned_common_width(self):
        rows = binary_rows([1440, 864, 672, 1120])
        assert rows == ["10110100000", "01101100000", "01010100000", "10001100000"]

    def test_marked_lowest_set_digit(self):
        rows = binary_rows_marked([6, 4])
        assert rows == ["1[1]0", "[1]00"]
