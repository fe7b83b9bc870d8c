"""Unit tests for IntMatrix and the Smith normal form."""

import random
import unittest

from local_reciprocity.abgroup.int_matrix import IntMatrix, SmithReduction, snf


class TestSmithNormalForm(unittest.TestCase):
    """Smith normal form on fixed and seeded matrices."""

    def assert_smith_form(self, m: IntMatrix):
        u, d, v = snf(m)
        self.assertEqual(u @ m @ v, d)
        self.assertIn(u.determinant(), (1, -1))
        self.assertIn(v.determinant(), (1, -1))
        diagonal = [d[i, i] for i in range(min(d.rows, d.cols))]
        for i in range(d.rows):
            for j in range(d.cols):
                if i != j:
                    self.assertEqual(d[i, j], 0)
        self.assertTrue(all(x >= 0 for x in diagonal))
        non_zero = [x for x in diagonal if x]
        self.assertEqual(diagonal[: len(non_zero)], non_zero, "zeros must come last")
        for a, b in zip(non_zero, non_zero[1:]):
            self.assertEqual(b % a, 0)
        return d

    def test_identity_then_identity(self):
        """The identity is already in Smith form."""
        d = self.assert_smith_form(IntMatrix.identity(2))
        self.assertEqual(d, IntMatrix([[1, 0], [0, 1]]))

    def test_two_by_two_then_gcd_and_determinant(self):
        """[[2,4],[6,8]] reduces to diag(2, 4)."""
        d = self.assert_smith_form(IntMatrix([[2, 4], [6, 8]]))
        self.assertEqual(d, IntMatrix([[2, 0], [0, 4]]))

    def test_zero_matrix_then_zero(self):
        """A zero matrix stays zero."""
        d = self.assert_smith_form(IntMatrix.zeros(2, 3))
        self.assertTrue(d.is_zero())
        self.assertEqual((d.rows, d.cols), (2, 3))

    def test_coprime_diagonal_then_one_and_product(self):
        """diag(2, 3) has Smith form diag(1, 6)."""
        d = self.assert_smith_form(IntMatrix.diagonal([2, 3]))
        self.assertEqual(d, IntMatrix.diagonal([1, 6]))

    def test_seeded_random_matrices_then_all_properties_hold(self):
        """Random rectangular matrices satisfy u·m·v = d with a divisibility chain."""
        rng = random.Random(7)
        for _ in range(25):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            m = IntMatrix(
                [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
            )
            self.assert_smith_form(m)

    def test_rank_deficient_then_trailing_zero(self):
        """A rank-one matrix has one non-zero invariant."""
        d = self.assert_smith_form(IntMatrix([[2, 4, 6], [4, 8, 12]]))
        self.assertEqual(d[0, 0], 2)
        self.assertEqual(d[1, 1], 0)

    def test_large_entries_then_no_overflow(self):
        """Entries beyond 64 bits are handled exactly."""
        big = 2**80 + 1
        d = self.assert_smith_form(IntMatrix([[big, 0], [0, 2**70]]))
        self.assertEqual(d[0, 0] * d[1, 1], big * 2**70)

    def test_mixed_unit_and_block_pivots_then_inverses_match(self):
        """Transforms folded in from the non-unit block keep their tracked inverses."""
        rng = random.Random(11)
        cases = [IntMatrix([[1, 2, 0], [0, 4, 6], [0, 6, 4]]), IntMatrix([[4, 6], [6, 4], [2, 2]])]
        cases += [
            IntMatrix([[rng.choice((0, 2, 3, 4, 6)) for _ in range(4)] for _ in range(3)])
            for _ in range(10)
        ]
        for m in cases:
            reduction = SmithReduction(m, track_left=True, track_right=True, track_inverses=True).run()
            u = IntMatrix(reduction.left, m.rows)
            u_inverse = IntMatrix.from_columns(reduction.left_inverse_columns, m.rows)
            v = IntMatrix.from_columns(reduction.right_columns, m.cols)
            v_inverse = IntMatrix(reduction.right_inverse, m.cols)
            self.assertEqual(u @ u_inverse, IntMatrix.identity(m.rows))
            self.assertEqual(v_inverse @ v, IntMatrix.identity(m.cols))
            self.assertEqual(u @ m @ v, IntMatrix(reduction.a, m.cols))
            self.assertEqual(reduction.rank, len([x for x in reduction.diagonal() if x]))


class TestIntMatrix(unittest.TestCase):
    """Basic matrix algebra."""

    def test_product_and_transpose(self):
        a = IntMatrix([[1, 2], [3, 4]])
        b = IntMatrix([[0, 1], [1, 0]])
        self.assertEqual(a @ b, IntMatrix([[2, 1], [4, 3]]))
        self.assertEqual(a.transpose(), IntMatrix([[1, 3], [2, 4]]))

    def test_determinant(self):
        self.assertEqual(IntMatrix([[2, 4], [6, 8]]).determinant(), -8)
        self.assertEqual(IntMatrix([[0, 1], [1, 0]]).determinant(), -1)
        self.assertEqual(IntMatrix([[1, 2], [2, 4]]).determinant(), 0)

    def test_block_diagonal_and_stacks(self):
        a = IntMatrix([[1]])
        b = IntMatrix([[2, 3]])
        self.assertEqual(IntMatrix.block_diagonal([a, b]), IntMatrix([[1, 0, 0], [0, 2, 3]]))
        self.assertEqual(IntMatrix.hstack([a, IntMatrix([[5]])], 1), IntMatrix([[1, 5]]))
        self.assertEqual(IntMatrix.vstack([b, b], 2), IntMatrix([[2, 3], [2, 3]]))

    def test_ragged_rows_then_error(self):
        with self.assertRaises(ValueError):
            IntMatrix([[1, 2], [3]])


if __name__ == "__main__":
    unittest.main()
