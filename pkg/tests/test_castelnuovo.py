import unittest
import sys
import os

from hypothesis import given
from hypothesis import strategies as st

# To run: python -m unittest tests/test_castelnuovo.py
# Add the project root directory to the Python path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.castelnuovo import (
    bw,
    enumerate_castelnuovo,
    from_partition,
    full_staircase,
    is_castelnuovo,
    is_full_staircase,
    make_poly,
    parse_coeffs,
    reduce_classify,
    sigma,
    star,
    terminal_bw,
    to_distinct_partition,
)
from src.errors import InvalidPolynomialError, NegativeCoefficientError
from src.models import CastelnuovoPoly, ChessCount, CoeffPoly, Partition, Terminal
from src.partition import chess_count, enumerate_distinct, enumerate_partitions

# Partitions of n into distinct parts, n = 0..15
DISTINCT_COUNTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27]

distinct_strategy = st.sets(st.integers(min_value=1, max_value=14), max_size=8).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)
partitions_strategy = st.lists(st.integers(min_value=1, max_value=12), max_size=10).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)

WORKED = Partition([6, 6, 4, 1, 1, 1])
WORKED_S = CastelnuovoPoly([1, 2, 3, 4, 4, 4, 1])
LONG_S = CastelnuovoPoly([1, 2, 3, 4, 5, 5, 3, 2, 1, 1, 1, 1])


class TestCoeffPoly(unittest.TestCase):
    def test_trailing_zeros_trimmed(self):
        f = make_poly([1, 2, 0, 0])
        self.assertEqual(f.coeffs, (1, 2))
        self.assertEqual(f.degree, 1)
        self.assertEqual(f.weight, 3)

    def test_zero_polynomial(self):
        f = make_poly([0, 0])
        self.assertTrue(f.is_zero())
        self.assertEqual(f.degree, -1)
        self.assertEqual(f.get_summary(), "0")

    def test_negative_coefficient_rejected(self):
        with self.assertRaises(InvalidPolynomialError):
            make_poly([1, -1])

    def test_indexing_past_degree(self):
        f = make_poly([1, 2])
        self.assertEqual(f[1], 2)
        self.assertEqual(f[5], 0)

    def test_summary(self):
        self.assertEqual(make_poly([1, 2, 1]).get_summary(), "1 + 2t + t^2")

    def test_equality_across_subclasses(self):
        self.assertEqual(CoeffPoly([1, 2]), CastelnuovoPoly([1, 2]))
        self.assertEqual(hash(CoeffPoly([1, 2])), hash(CastelnuovoPoly([1, 2])))


class TestCastelnuovoShape(unittest.TestCase):
    def test_accepts(self):
        for coeffs in ([], [1], [1, 1], [1, 2], [1, 2, 2, 1], [1, 2, 3, 4, 4, 4, 1]):
            self.assertTrue(is_castelnuovo(make_poly(coeffs)), coeffs)

    def test_rejects(self):
        for coeffs in ([2], [0, 1], [1, 2, 1, 2], [1, 2, 3, 3, 4], [1, 0, 1], [1, 3]):
            self.assertFalse(is_castelnuovo(make_poly(coeffs)), coeffs)

    def test_constructor_validates(self):
        with self.assertRaises(InvalidPolynomialError):
            CastelnuovoPoly([1, 3])

    def test_sigma(self):
        self.assertEqual(sigma(CastelnuovoPoly()), 0)
        self.assertEqual(sigma(CastelnuovoPoly([1, 1, 1])), 1)
        self.assertEqual(sigma(WORKED_S), 4)
        self.assertEqual(sigma(LONG_S), 5)

    def test_parse_coeffs(self):
        self.assertEqual(parse_coeffs("1,2,3,4,4,4,1"), WORKED_S)
        self.assertEqual(parse_coeffs(""), CastelnuovoPoly())
        with self.assertRaises(InvalidPolynomialError):
            parse_coeffs("1,two")
        with self.assertRaises(InvalidPolynomialError):
            parse_coeffs("2,1")

    def test_full_staircase(self):
        self.assertEqual(full_staircase(0), CastelnuovoPoly([1]))
        self.assertEqual(full_staircase(3), CastelnuovoPoly([1, 2, 3, 4]))
        self.assertTrue(is_full_staircase(make_poly([1, 2, 3])))
        self.assertFalse(is_full_staircase(make_poly([1, 2, 2])))
        self.assertFalse(is_full_staircase(make_poly([])))


class TestDiagonalMap(unittest.TestCase):
    def test_worked_example(self):
        s = from_partition(WORKED)
        self.assertEqual(s, WORKED_S)
        self.assertEqual(bw(s), ChessCount(b=9, w=10))

    def test_long_example_counts(self):
        self.assertEqual(LONG_S.weight, 29)
        self.assertEqual(bw(LONG_S), ChessCount(b=14, w=15))

    def test_empty(self):
        self.assertEqual(from_partition(Partition()), CastelnuovoPoly())

    def test_inverse_on_worked_example(self):
        self.assertEqual(to_distinct_partition(WORKED_S), Partition([7, 5, 4, 3]))
        self.assertEqual(from_partition(Partition([7, 5, 4, 3])), WORKED_S)

    @given(partitions_strategy)
    def test_keeps_weight_and_chess_count(self, la):
        s = from_partition(la)
        self.assertTrue(is_castelnuovo(s))
        self.assertEqual(s.weight, sum(la.parts))
        self.assertEqual(bw(s), chess_count(la))

    @given(distinct_strategy)
    def test_inverse_round_trip(self, la):
        self.assertEqual(to_distinct_partition(from_partition(la)), la)

    def test_bijection_exhaustive(self):
        for n in range(26):
            image = {from_partition(la) for la in enumerate_distinct(n)}
            functions = set(enumerate_castelnuovo(n))
            self.assertEqual(image, functions, n)
            for s in functions:
                self.assertEqual(from_partition(to_distinct_partition(s)), s)
            for la in enumerate_distinct(n):
                self.assertEqual(to_distinct_partition(from_partition(la)), la)

    def test_inverse_matches_search(self):
        for n in range(26):
            by_image = {}
            for la in enumerate_distinct(n):
                s = from_partition(la)
                self.assertNotIn(s, by_image, la)
                by_image[s] = la
            for s in enumerate_castelnuovo(n):
                self.assertEqual(to_distinct_partition(s), by_image[s], s)

    def test_surjective_from_all_partitions(self):
        for n in range(13):
            image = {from_partition(la) for la in enumerate_partitions(n)}
            self.assertEqual(image, set(enumerate_castelnuovo(n)), n)


class TestEnumerateCastelnuovo(unittest.TestCase):
    def test_counts(self):
        for n, expected in enumerate(DISTINCT_COUNTS):
            listed = list(enumerate_castelnuovo(n))
            self.assertEqual(len(listed), expected, n)
            self.assertEqual(len(set(listed)), expected, n)
            self.assertTrue(all(s.weight == n for s in listed))

    def test_small(self):
        self.assertEqual(list(enumerate_castelnuovo(0)), [CastelnuovoPoly()])
        self.assertEqual(set(enumerate_castelnuovo(3)), {CastelnuovoPoly([1, 1, 1]), CastelnuovoPoly([1, 2])})
        self.assertEqual(list(enumerate_castelnuovo(-1)), [])


class TestStar(unittest.TestCase):
    def test_removes_two_top_squares(self):
        self.assertEqual(star(WORKED_S), make_poly([1, 2, 3, 4, 4, 3]))
        self.assertEqual(star(make_poly([1, 1])), make_poly([]))

    def test_fixed_points(self):
        self.assertEqual(star(make_poly([])), make_poly([]))
        self.assertEqual(star(make_poly([1])), make_poly([1]))

    def test_leaves_set_on_staircase(self):
        self.assertFalse(is_castelnuovo(star(full_staircase(1))))
        self.assertFalse(is_castelnuovo(star(full_staircase(4))))

    def test_negative_coefficient(self):
        with self.assertRaises(NegativeCoefficientError):
            star(make_poly([1, 0, 1]))

    def test_exit_only_on_staircases(self):
        for n in range(16):
            for s in enumerate_castelnuovo(n):
                if s.degree <= 0:
                    continue
                self.assertEqual(not is_castelnuovo(star(s)), is_full_staircase(s), s)


class TestReduction(unittest.TestCase):
    def test_worked_example(self):
        result = reduce_classify(WORKED_S)
        self.assertEqual(result.steps, 8)
        self.assertEqual(result.terminal, Terminal(kind="staircase", u=1))
        self.assertIsNone(result.trace)

    def test_trace(self):
        result = reduce_classify(WORKED_S, keep_trace=True)
        self.assertEqual(len(result.trace), result.steps + 1)
        self.assertEqual(result.trace[0], WORKED_S)
        self.assertEqual(result.trace[-1], full_staircase(1))

    def test_fixed_points(self):
        zero = reduce_classify(CastelnuovoPoly())
        self.assertEqual((zero.steps, zero.terminal.kind), (0, "zero"))
        one = reduce_classify(CastelnuovoPoly([1]))
        self.assertEqual((one.steps, one.terminal.kind), (0, "one"))

    def test_reaches_zero(self):
        result = reduce_classify(CastelnuovoPoly([1, 1]))
        self.assertEqual(result.steps, 1)
        self.assertEqual(result.terminal.kind, "zero")

    def test_staircase_is_already_terminal(self):
        result = reduce_classify(full_staircase(3))
        self.assertEqual(result.steps, 0)
        self.assertEqual(result.terminal, Terminal(kind="staircase", u=3))

    def test_terminal_counts(self):
        self.assertEqual(terminal_bw(Terminal(kind="zero")), ChessCount(b=0, w=0))
        self.assertEqual(terminal_bw(Terminal(kind="one")), ChessCount(b=1, w=0))
        for u in range(1, 9):
            self.assertEqual(terminal_bw(Terminal(kind="staircase", u=u)), bw(full_staircase(u)), u)

    def test_steps_equal_slack_exhaustive(self):
        for n in range(13):
            for la in enumerate_partitions(n):
                count = chess_count(la)
                result = reduce_classify(from_partition(la))
                rest = terminal_bw(result.terminal)
                self.assertEqual(result.steps, count.b - (count.b - count.w) ** 2, la)
                self.assertEqual((rest.b + result.steps, rest.w + result.steps), (count.b, count.w), la)

    def test_terminal_requires_u_only_for_staircase(self):
        with self.assertRaises(ValueError):
            Terminal(kind="staircase")
        with self.assertRaises(ValueError):
            Terminal(kind="one", u=2)


if __name__ == "__main__":
    unittest.main()
