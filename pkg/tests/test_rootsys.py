#!/usr/bin/env python3
"""
Unit tests for root system construction and root operations.
"""

import unittest
import sys
import os
from fractions import Fraction

# Add src to the path so we can import the package
sys.path.insert(
    0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))
)

from parideals.errors import InvalidRank, NotARoot  # noqa: E402
from parideals.rootsys import (  # noqa: E402
    Family,
    RootSystemType,
    build,
    build_named,
    coroot,
    dynkin_edges,
    negate,
    pairing,
    reflect,
    reflection_matrix,
    sum_root,
    unit,
)


POSITIVE_ROOT_COUNTS = {
    "A1": 1,
    "A4": 10,
    "B3": 9,
    "C4": 16,
    "D4": 12,
    "D5": 20,
    "E6": 36,
    "E7": 63,
    "E8": 120,
    "F4": 24,
    "G2": 6,
}

# Σ_{α>0} ht(α) = Σ m(m+1)/2 over the exponents m
HEIGHT_SUMS = {
    "A3": 10,
    "A4": 20,
    "B3": 22,
    "C3": 22,
    "D4": 28,
    "G2": 16,
    "F4": 110,
    "E6": 156,
    "E7": 399,
    "E8": 1240,
}

HIGHEST_ROOTS = {
    "A2": (1, 1),
    "B3": (1, 2, 2),
    "C3": (2, 2, 1),
    "D4": (1, 2, 1, 1),
    "E6": (1, 2, 2, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
    "F4": (2, 3, 4, 2),
    "G2": (3, 2),
}


class TestRootSystemType(unittest.TestCase):
    """Validation and parsing of type labels."""

    def test_parse(self):
        rtype = RootSystemType.parse("b3")
        self.assertEqual(rtype.family, Family.B)
        self.assertEqual(rtype.rank, 3)
        self.assertEqual(str(rtype), "B3")

    def test_invalid_ranks(self):
        for label in ("B1", "C1", "E5", "E9", "F3", "G3", "A0"):
            with self.subTest(label=label):
                with self.assertRaises(InvalidRank):
                    RootSystemType.parse(label)

    def test_unparseable(self):
        for label in ("", "B", "Bx", "X3"):
            with self.subTest(label=label):
                with self.assertRaises(InvalidRank):
                    RootSystemType.parse(label)

    def test_build_named_unknown_family(self):
        with self.assertRaises(InvalidRank):
            build_named("Q", 3)


class TestBuild(unittest.TestCase):
    """Root data of every family."""

    def test_positive_root_counts(self):
        for label, count in POSITIVE_ROOT_COUNTS.items():
            with self.subTest(label=label):
                rs = build(RootSystemType.parse(label))
                self.assertEqual(len(rs.positive_roots), count)
                self.assertEqual(len(rs.roots), 2 * count)

    def test_highest_roots_and_marks(self):
        for label, theta in HIGHEST_ROOTS.items():
            with self.subTest(label=label):
                rs = build(RootSystemType.parse(label))
                self.assertEqual(rs.highest_root, theta)
                self.assertEqual(rs.marks, theta)

    def test_simple_roots_come_first(self):
        rs = build_named("F", 4)
        self.assertEqual(rs.simple_root(1), (1, 0, 0, 0))
        self.assertEqual(rs.simple_root(4), (0, 0, 0, 1))

    def test_simple_roots_in_index_order(self):
        """Bit i-1 of every root set is α_i."""
        for label in ("A3", "B3", "C4", "D5", "E6", "G2"):
            with self.subTest(label=label):
                rs = build(RootSystemType.parse(label))
                units = tuple(unit(rs.rank, i) for i in range(1, rs.rank + 1))
                self.assertEqual(rs.simple_roots, units)
                self.assertEqual(rs.positive_roots[: rs.rank], units)
                for i in range(1, rs.rank + 1):
                    self.assertEqual(rs.root_index(rs.simple_root(i)), i - 1)
        self.assertEqual(build_named("A", 3).simple_root(1), (1, 0, 0))

    def test_positive_roots_graded_by_height(self):
        rs = build_named("B", 4)
        heights = [sum(r) for r in rs.positive_roots]
        self.assertEqual(heights, sorted(heights))
        self.assertEqual(rs.positive_roots[-1], rs.highest_root)

    def test_height_sums(self):
        for label, expected in HEIGHT_SUMS.items():
            with self.subTest(label=label):
                rs = build(RootSystemType.parse(label))
                self.assertEqual(sum(sum(r) for r in rs.positive_roots), expected)

    def test_long_roots_have_length_two(self):
        for label in ("B3", "C3", "F4", "G2"):
            with self.subTest(label=label):
                rs = build(RootSystemType.parse(label))
                self.assertEqual(rs.norm_sq(rs.highest_root), 2)

    def test_short_roots(self):
        self.assertEqual(build_named("B", 3).norm_sq((0, 0, 1)), 1)
        self.assertEqual(build_named("C", 3).norm_sq((1, 0, 0)), 1)
        self.assertEqual(build_named("G", 2).norm_sq((1, 0)), Fraction(2, 3))

    def test_cartan_convention(self):
        rs = build_named("B", 2)
        # α1 long, α2 short
        self.assertEqual(rs.cartan, ((2, -2), (-1, 2)))

    def test_cached(self):
        self.assertIs(build_named("A", 3), build_named("a", 3))

    def test_dynkin_edges(self):
        self.assertEqual(dynkin_edges(build_named("D", 4)), [(1, 2), (2, 3), (2, 4)])
        self.assertEqual(
            sorted(dynkin_edges(build_named("E", 6))),
            [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)],
        )

    def test_coweights_are_dual(self):
        rs = build_named("C", 3)
        for i, omega in enumerate(rs.fundamental_coweights, start=1):
            for j in range(1, 4):
                expected = 1 if i == j else 0
                self.assertEqual(pairing(rs, rs.simple_root(j), omega), expected)

    def test_alcove_vertices(self):
        rs = build_named("B", 3)
        self.assertEqual(rs.alcove_vertex(0), (0, 0, 0))
        for i in range(1, 4):
            self.assertEqual(pairing(rs, rs.highest_root, rs.alcove_vertex(i)), 1)
        self.assertEqual(rs.mark(0), 1)

    def test_root_index(self):
        rs = build_named("A", 2)
        self.assertEqual(rs.positive_roots[rs.root_index((1, 1))], (1, 1))
        with self.assertRaises(NotARoot):
            rs.root_index((1, -1))


class TestRootOperations(unittest.TestCase):
    """sum_root, pairing, coroot, reflect."""

    def setUp(self):
        self.a2 = build_named("A", 2)
        self.b2 = build_named("B", 2)

    def test_sum_root(self):
        self.assertEqual(sum_root(self.a2, (1, 0), (0, 1)), (1, 1))
        self.assertIsNone(sum_root(self.a2, (1, 1), (1, 0)))
        self.assertIsNone(sum_root(self.a2, (1, 0), (1, 0)))
        self.assertEqual(sum_root(self.b2, (0, 1), (1, 1)), (1, 2))

    def test_sum_root_rejects_non_roots(self):
        with self.assertRaises(NotARoot):
            sum_root(self.a2, (2, 0), (0, 1))

    def test_pairing(self):
        self.assertEqual(pairing(self.a2, (1, 0), (0, 1)), -1)
        theta = self.b2.highest_root
        self.assertEqual(pairing(self.b2, theta, theta), 2)

    def test_coroot(self):
        self.assertEqual(coroot(self.a2, (1, 1)), (1, 1))
        self.assertEqual(coroot(self.b2, (0, 1)), (0, 2))
        for root in self.b2.roots:
            self.assertEqual(pairing(self.b2, coroot(self.b2, root), root), 2)

    def test_reflect(self):
        self.assertEqual(reflect(self.a2, (1, 0), (1, 0)), (-1, 0))
        self.assertEqual(reflect(self.a2, (1, 0), (0, 1)), (1, 1))
        # (α1, α1 + 2α2) = 0 in B2
        self.assertEqual(reflect(self.b2, (1, 0), (1, 2)), (1, 2))

    def test_reflection_matrix_permutes_roots(self):
        rs = build_named("G", 2)
        for root in rs.simple_roots:
            m = reflection_matrix(rs, root)
            images = {
                tuple(sum(m[i][j] * r[j] for j in range(2)) for i in range(2))
                for r in rs.roots
            }
            self.assertEqual(images, set(rs.roots))

    def test_negate(self):
        self.assertEqual(negate((1, 2)), (-1, -2))


if __name__ == "__main__":
    unittest.main()
