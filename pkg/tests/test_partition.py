import unittest
import sys
import os

from hypothesis import given
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import partition as partition_count

# To run: python -m unittest tests/test_partition.py
# Add the project root directory to the Python path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.errors import InvalidPartitionError
from src.models import Cell, ChessCount, Partition
from src.partition import (
    cells,
    chess_count,
    chess_count_by_cells,
    chess_count_closed_form,
    conjugate,
    enumerate_distinct,
    enumerate_partitions,
    is_distinct,
    make_partition,
    parse_parts,
    partitions_bounded,
    signed_sum,
    staircase,
    weight,
)

# Partitions of n into distinct parts, n = 0..15
DISTINCT_COUNTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27]

partitions_strategy = st.lists(st.integers(min_value=1, max_value=15), max_size=12).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)


class TestPartitionModel(unittest.TestCase):
    def test_valid_partition(self):
        la = make_partition([6, 6, 4, 1, 1, 1])
        self.assertEqual(la.parts, (6, 6, 4, 1, 1, 1))
        self.assertEqual(la.length, 6)
        self.assertEqual(la.part(1), 6)
        self.assertEqual(la.part(3), 4)
        self.assertEqual(la.part(7), 0)
        self.assertEqual(la.get_summary(), "(6,6,4,1,1,1)")

    def test_empty_partition(self):
        la = make_partition([])
        self.assertEqual(la.length, 0)
        self.assertEqual(weight(la), 0)
        self.assertEqual(chess_count(la), ChessCount(b=0, w=0))

    def test_rejects_increasing_parts(self):
        with self.assertRaises(InvalidPartitionError):
            make_partition([1, 2])

    def test_rejects_zero_and_negative_parts(self):
        with self.assertRaises(InvalidPartitionError):
            make_partition([3, 0])
        with self.assertRaises(InvalidPartitionError):
            make_partition([-1])

    def test_rejects_non_integers(self):
        with self.assertRaises(InvalidPartitionError):
            make_partition([2.5, 1])
        with self.assertRaises(InvalidPartitionError):
            make_partition([True])

    def test_invalid_partition_is_a_value_error(self):
        with self.assertRaises(ValueError):
            make_partition([1, 3])

    def test_equality_and_hash(self):
        self.assertEqual(Partition([3, 1]), Partition((3, 1)))
        self.assertEqual(len({Partition([3, 1]), Partition((3, 1)), Partition([2, 2])}), 2)


class TestParseParts(unittest.TestCase):
    def test_comma_and_space_forms(self):
        self.assertEqual(parse_parts("6,6,4,1"), Partition([6, 6, 4, 1]))
        self.assertEqual(parse_parts("6 6 4 1"), Partition([6, 6, 4, 1]))
        self.assertEqual(parse_parts(" 6, 6 ,4,1 "), Partition([6, 6, 4, 1]))

    def test_blank_is_empty(self):
        self.assertEqual(parse_parts(""), Partition())
        self.assertEqual(parse_parts("   "), Partition())

    def test_garbage_raises(self):
        with self.assertRaises(InvalidPartitionError):
            parse_parts("6,x,1")
        with self.assertRaises(InvalidPartitionError):
            parse_parts("1,2")

    def test_empty_items_raise(self):
        for text in ("3,,1", "3,1,", ",3,1", "3 , , 1"):
            with self.assertRaises(InvalidPartitionError, msg=text):
                parse_parts(text)


class TestChessCount(unittest.TestCase):
    def test_worked_example(self):
        self.assertEqual(chess_count(Partition([6, 6, 4, 1, 1, 1])), ChessCount(b=9, w=10))

    def test_larger_example(self):
        la = Partition([8, 6, 6, 5, 2, 1, 1])
        self.assertEqual(weight(la), 29)
        self.assertEqual(chess_count(la), ChessCount(b=14, w=15))

    def test_small_cases(self):
        self.assertEqual(chess_count(Partition([1])), ChessCount(b=1, w=0))
        self.assertEqual(chess_count(Partition([2, 1])), ChessCount(b=1, w=2))
        self.assertEqual(chess_count(Partition([1, 1])), ChessCount(b=1, w=1))

    def test_bottom_left_square_is_black(self):
        first = next(cells(Partition([4, 2])))
        self.assertEqual(first, Cell(row=0, col=0))
        self.assertTrue(first.is_black)

    def test_cells_cover_the_diagram(self):
        la = Partition([4, 3, 3, 1])
        listed = list(cells(la))
        self.assertEqual(len(listed), 11)
        self.assertIn(Cell(row=3, col=0), listed)
        self.assertNotIn(Cell(row=3, col=1), listed)

    @given(partitions_strategy)
    def test_two_methods_agree(self, la):
        self.assertEqual(chess_count_by_cells(la), chess_count_closed_form(la))

    @given(partitions_strategy)
    def test_counts_add_up_to_weight(self, la):
        count = chess_count(la)
        self.assertEqual(count.b + count.w, weight(la))

    @given(partitions_strategy)
    def test_conjugation_keeps_chess_count(self, la):
        self.assertEqual(chess_count(conjugate(la)), chess_count(la))

    def test_exhaustive_realizability_up_to_12(self):
        for n in range(13):
            for la in enumerate_partitions(n):
                count = chess_count(la)
                self.assertLessEqual((count.b - count.w) ** 2, count.b, la.get_summary())


class TestConjugate(unittest.TestCase):
    def test_worked_example(self):
        self.assertEqual(conjugate(Partition([6, 6, 4, 1, 1, 1])), Partition([6, 3, 3, 3, 2, 2]))

    def test_edge_cases(self):
        self.assertEqual(conjugate(Partition()), Partition())
        self.assertEqual(conjugate(Partition([5])), Partition([1, 1, 1, 1, 1]))
        self.assertEqual(conjugate(staircase(4)), staircase(4))

    @given(partitions_strategy)
    def test_involution(self, la):
        self.assertEqual(conjugate(conjugate(la)), la)
        self.assertEqual(weight(conjugate(la)), weight(la))


class TestSignedSum(unittest.TestCase):
    def test_label_example(self):
        la = Partition([4, 3, 3, 1])
        self.assertEqual(weight(la), 11)
        self.assertEqual(signed_sum(la), -1)

    def test_staircase(self):
        self.assertEqual(signed_sum(Partition([3, 2, 1])), 2)
        self.assertEqual(signed_sum(Partition([1])), 1)
        self.assertEqual(signed_sum(Partition()), 0)

    @given(partitions_strategy)
    def test_matches_chess_count(self, la):
        count = chess_count(la)
        self.assertEqual(signed_sum(la), count.b - count.w)


class TestStaircase(unittest.TestCase):
    def test_values(self):
        self.assertEqual(staircase(0), Partition())
        self.assertEqual(staircase(1), Partition([1]))
        self.assertEqual(staircase(4), Partition([4, 3, 2, 1]))

    def test_negative_raises(self):
        with self.assertRaises(InvalidPartitionError):
            staircase(-1)


class TestEnumeration(unittest.TestCase):
    def test_counts_match_partition_numbers(self):
        for n in range(16):
            listed = list(enumerate_partitions(n))
            self.assertEqual(len(listed), partition_count(n), n)
            self.assertEqual(len(set(listed)), len(listed))
            self.assertTrue(all(weight(la) == n for la in listed))

    def test_distinct_counts(self):
        for n, expected in enumerate(DISTINCT_COUNTS):
            listed = list(enumerate_distinct(n))
            self.assertEqual(len(listed), expected, n)
            self.assertTrue(all(is_distinct(la) for la in listed))

    def test_weight_zero_and_negative(self):
        self.assertEqual(list(enumerate_partitions(0)), [Partition()])
        self.assertEqual(list(enumerate_distinct(0)), [Partition()])
        self.assertEqual(list(enumerate_partitions(-1)), [])
        self.assertEqual(list(enumerate_distinct(-3)), [])

    def test_order_starts_with_single_part(self):
        listed = list(enumerate_partitions(4))
        self.assertEqual(listed[0], Partition([4]))
        self.assertEqual(listed[-1], Partition([1, 1, 1, 1]))

    def test_bounded(self):
        self.assertEqual(
            list(partitions_bounded(5, max_part=2)),
            [Partition([2, 2, 1]), Partition([2, 1, 1, 1]), Partition([1, 1, 1, 1, 1])],
        )
        self.assertEqual(list(partitions_bounded(3, max_part=0)), [])
        self.assertEqual(list(partitions_bounded(0, max_part=0)), [Partition()])

    def test_bounded_distinct(self):
        self.assertEqual(
            list(partitions_bounded(6, distinct=True)),
            [Partition([6]), Partition([5, 1]), Partition([4, 2]), Partition([3, 2, 1])],
        )


if __name__ == "__main__":
    unittest.main()
