"""Unit tests for short exact sequences, connecting maps and dimension shifting."""

import unittest

from local_reciprocity.abgroup.fg_ab_group import AbHom, FgAbGroup
from local_reciprocity.cohomology.coh_group import COHOMOLOGY, HOMOLOGY, tate
from local_reciprocity.cohomology.exact import (
    DOWN,
    UP,
    ShortExact,
    augmentation_sequence,
    connecting,
    dimension_shift,
    induced_map,
    integer_sequence,
    long_exact_sequence,
    multiplication_sequence,
    termwise,
)
from local_reciprocity.gmodule.constructions import (
    integers,
    trivial_module,
    twisted_cyclic,
)
from local_reciprocity.gmodule.gmodule import GModuleHom
from local_reciprocity.group.finite_group import cyclic
from local_reciprocity.utils.errors import DegreeOutOfRange, InvalidModule, NotExact


class TestShortExact(unittest.TestCase):
    """Validation of 0 -> A -> B -> C -> 0."""

    def test_identity_twice_then_not_exact(self):
        z = integers(cyclic(2))
        identity = GModuleHom.identity(z)
        with self.assertRaises(NotExact):
            ShortExact(identity, identity)

    def test_zero_first_map_then_not_exact(self):
        z = integers(cyclic(2))
        with self.assertRaises(NotExact):
            ShortExact(GModuleHom.zero(z, z), GModuleHom.identity(z))

    def test_standard_sequences_are_exact(self):
        for n in (2, 3):
            se = augmentation_sequence(cyclic(n))
            self.assertEqual(se.a.name, "I_G")
            se = integer_sequence(cyclic(n), n)
            self.assertEqual(se.c.underlying, FgAbGroup.cyclic(n))

    def test_multiplication_needs_free_module(self):
        with self.assertRaises(InvalidModule):
            multiplication_sequence(trivial_module(cyclic(2), FgAbGroup((4,))), 2)
        with self.assertRaises(InvalidModule):
            multiplication_sequence(integers(cyclic(2)), 1)


class TestConnecting(unittest.TestCase):
    """Connecting homomorphisms on representatives."""

    def test_integer_sequence_delta_is_injective(self):
        se = integer_sequence(cyclic(3), 3)
        delta = connecting(se, 1, COHOMOLOGY)
        self.assertTrue(delta.is_injective())
        self.assertTrue(delta.is_isomorphism())
        self.assertTrue(delta(delta.source.zero()).is_zero())

    def test_splice_on_augmentation_sequence(self):
        se = augmentation_sequence(cyclic(3))
        self.assertTrue(connecting(se, -1).is_isomorphism())
        delta = connecting(se, -2)
        self.assertEqual(delta.source.group, FgAbGroup.cyclic(3))
        self.assertTrue(delta.is_isomorphism())

    def test_homology_connecting_into_free_group_is_zero(self):
        se = integer_sequence(cyclic(2), 2)
        delta = connecting(se, 1, HOMOLOGY)
        self.assertEqual(delta.source.group, FgAbGroup.cyclic(2))
        self.assertTrue(delta.is_zero())
        with self.assertRaises(DegreeOutOfRange):
            connecting(se, 0, HOMOLOGY)

    def test_long_exact_sequences(self):
        sequences = [
            augmentation_sequence(cyclic(2)),
            integer_sequence(cyclic(2), 2),
            multiplication_sequence(twisted_cyclic(cyclic(2), 0, -1), 3),
            integer_sequence(cyclic(3), 3),
        ]
        for se in sequences:
            les = long_exact_sequence(se, -2, 1)
            self.assertEqual(len(les.maps), 12)
            self.assertTrue(les.is_exact(), f"{se!r}: {les.checks}")

    def test_long_exact_cohomology_sequence(self):
        les = long_exact_sequence(integer_sequence(cyclic(4), 2), 0, 1, COHOMOLOGY)
        self.assertTrue(les.is_exact())
        with self.assertRaises(ValueError):
            long_exact_sequence(integer_sequence(cyclic(2), 2), 0, 1, HOMOLOGY)


class TestInducedMaps(unittest.TestCase):
    """Functoriality of H_T^r."""

    def test_identity_induces_identity(self):
        module = twisted_cyclic(cyclic(4), 5, 2)
        for r in (-1, 0, 1):
            f = induced_map(GModuleHom.identity(module), r)
            self.assertEqual(f.hom, AbHom.identity(f.source.group))

    def test_multiplication_by_order_kills_tate_groups(self):
        z = integers(cyclic(3))
        times_three = GModuleHom(z, z, AbHom.identity(z.underlying).scale(3))
        for r in (-2, 0, 2):
            self.assertTrue(induced_map(times_three, r).is_zero())

    def test_termwise_shape(self):
        se = augmentation_sequence(cyclic(3))
        block = termwise(se.i, 2)
        self.assertEqual((block.matrix.rows, block.matrix.cols), (9 * 3, 9 * 2))
        self.assertEqual(termwise(se.p, -2).matrix.cols, 3 * 3)


class TestDimensionShift(unittest.TestCase):
    """0 -> I_G ⊗ M -> Z[G] ⊗ M -> M -> 0 and 0 -> M -> Z[G] ⊗ M -> J_G ⊗ M -> 0."""

    def test_shift_up_on_integers(self):
        z = integers(cyclic(2))
        shifted, se = dimension_shift(z, UP)
        self.assertEqual(se.c, z)
        self.assertEqual(tate(z, 0).group, FgAbGroup.cyclic(2))
        self.assertEqual(tate(shifted, 1).group, FgAbGroup.cyclic(2))
        self.assertTrue(connecting(se, 0).is_isomorphism())

    def test_shift_down(self):
        module = twisted_cyclic(cyclic(3), 7, 2)
        shifted, se = dimension_shift(module, DOWN)
        self.assertEqual(se.a, module)
        for r in (-1, 0):
            self.assertTrue(connecting(se, r).is_isomorphism(), f"r={r}")

    def test_shift_up_connecting_is_isomorphism(self):
        for module in (integers(cyclic(3)), twisted_cyclic(cyclic(2), 0, -1)):
            _, se = dimension_shift(module, UP)
            for r in (-2, -1, 0, 1):
                self.assertTrue(connecting(se, r).is_isomorphism(), f"{module.name} r={r}")

    def test_unknown_direction(self):
        with self.assertRaises(ValueError):
            dimension_shift(integers(cyclic(2)), "sideways")


if __name__ == "__main__":
    unittest.main()
