"""Unit tests for Herbrand quotients."""

import random
import unittest
from fractions import Fraction

from local_reciprocity.abgroup.fg_ab_group import FgAbGroup
from local_reciprocity.cohomology.exact import (
    augmentation_sequence,
    integer_sequence,
    multiplication_sequence,
)
from local_reciprocity.cohomology.herbrand import herbrand, herbrand_of_sequence
from local_reciprocity.gmodule.constructions import (
    group_ring,
    integers,
    trivial_module,
    twisted_cyclic,
)
from local_reciprocity.group.finite_group import cyclic, klein
from local_reciprocity.utils.config import Config
from local_reciprocity.utils.errors import NotCyclic


class TestHerbrand(unittest.TestCase):
    """h(M) = |H_T^0| / |H_T^1| over cyclic groups."""

    def test_finite_modules_have_quotient_one(self):
        modules = [
            twisted_cyclic(cyclic(2), 8, 3),
            trivial_module(cyclic(2), FgAbGroup((4,))),
            twisted_cyclic(cyclic(4), 5, 2),
            trivial_module(cyclic(3), FgAbGroup((3, 9))),
        ]
        for module in modules:
            self.assertEqual(herbrand(module), 1, module.name)

    def test_integers(self):
        for n in (2, 3, 4, 5):
            self.assertEqual(herbrand(integers(cyclic(n))), n)

    def test_group_ring_and_sign_twist(self):
        self.assertEqual(herbrand(group_ring(cyclic(3))), 1)
        self.assertEqual(herbrand(twisted_cyclic(cyclic(2), 0, -1)), Fraction(1, 2))

    def test_non_cyclic_group_then_rejected(self):
        with self.assertRaises(NotCyclic):
            herbrand(integers(klein()))

    def test_multiplicativity(self):
        h_a, h_b, h_c = herbrand_of_sequence(integer_sequence(cyclic(3), 3))
        self.assertEqual((h_a, h_b, h_c), (3, 3, 1))
        h_a, h_b, h_c = herbrand_of_sequence(augmentation_sequence(cyclic(3)))
        self.assertEqual(h_a, Fraction(1, 3))
        self.assertEqual(h_b, h_a * h_c)

    def test_multiplicativity_on_random_sequences(self):
        rng = random.Random(Config.instance().default_seed)
        for _ in range(6):
            n = rng.choice((2, 3, 4))
            k = rng.randint(2, 6)
            u = rng.choice([v for v in (1, -1) if v == 1 or n % 2 == 0])
            se = multiplication_sequence(twisted_cyclic(cyclic(n), 0, u), k)
            h_a, h_b, h_c = herbrand_of_sequence(se)
            self.assertEqual(h_b, h_a * h_c, f"n={n} k={k} u={u}")
            self.assertEqual(h_c, 1)


if __name__ == "__main__":
    unittest.main()
