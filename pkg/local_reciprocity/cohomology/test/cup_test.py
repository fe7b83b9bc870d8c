"""Unit tests for cup products at the supported bidegrees."""

import unittest

from local_reciprocity.abgroup.fg_ab_group import FgAbGroup
from local_reciprocity.cohomology.coh_group import tate
from local_reciprocity.cohomology.cochain import Cochain
from local_reciprocity.cohomology.cup import cup
from local_reciprocity.cohomology.exact import ShortExact, augmentation_sequence, connecting
from local_reciprocity.cohomology.splitting import (
    abelianization_to_tate,
    carry_cocycle,
    reciprocity_from_cocycle,
)
from local_reciprocity.gmodule.constructions import (
    augmentation,
    augmentation_ideal,
    integers,
    tensor_hom,
    trivial_module,
    twisted_cyclic,
)
from local_reciprocity.gmodule.gmodule import GModuleHom
from local_reciprocity.group.finite_group import cyclic
from local_reciprocity.utils.errors import UnsupportedBidegree


class TestCupFormulas(unittest.TestCase):
    """The closed formulas and their domain."""

    def test_unit_class_is_neutral(self):
        z = integers(cyclic(4))
        one = tate(z, 0).class_of(Cochain(z, 0, [1]))
        self.assertEqual(cup(one, one), one)
        generator = tate(z, 2).generators()[0]
        self.assertEqual(cup(generator, one), generator)
        generator = tate(z, -2).generators()[0]
        self.assertEqual(cup(generator, one), generator)

    def test_zero_class_gives_zero(self):
        group = cyclic(3)
        z = integers(group)
        phi = tate(z, 2).class_of(carry_cocycle(3))
        sigma = abelianization_to_tate(group, 1)
        self.assertTrue(cup(tate(z, 2).zero(), sigma).is_zero())
        self.assertTrue(cup(phi, tate(z, -2).zero()).is_zero())
        self.assertTrue(cup(tate(z, 1).zero(), tate(z, -1).zero()).is_zero())
        self.assertTrue(cup(tate(z, 0).zero(), tate(z, 0).generators()[0]).is_zero())

    def test_unsupported_bidegrees(self):
        z = integers(cyclic(2))
        with self.assertRaises(UnsupportedBidegree):
            cup(tate(z, 2).zero(), tate(z, 1).zero())
        with self.assertRaises(UnsupportedBidegree):
            cup(tate(z, 0).zero(), tate(z, 1).zero())
        twisted = twisted_cyclic(cyclic(2), 0, -1)
        with self.assertRaises(UnsupportedBidegree):
            cup(tate(z, 1).zero(), tate(twisted, -2).zero())

    def test_two_minus_two_matches_reciprocity(self):
        for n in (2, 3, 4):
            group = cyclic(n)
            phi = carry_cocycle(n)
            fundamental = tate(phi.module, 2).class_of(phi)
            for sigma in group.elements():
                self.assertEqual(cup(fundamental, abelianization_to_tate(group, sigma)),
                                 reciprocity_from_cocycle(phi, sigma))

    def test_cup_with_fundamental_class_is_periodicity(self):
        group = cyclic(3)
        fundamental = tate(integers(group), 2).class_of(carry_cocycle(3))
        images = [cup(fundamental, abelianization_to_tate(group, s)) for s in group.elements()]
        self.assertEqual(len(set(images)), 3)


class TestCupDeltaCompatibility(unittest.TestCase):
    """Cup products against connecting maps of Z-split sequences."""

    def test_delta_of_left_factor(self):
        # (δa) ⌣ b = δ(a ⌣ b) for b of degree 0
        group = cyclic(2)
        n = trivial_module(group, FgAbGroup((4,)))
        identity = GModuleHom.identity(n)
        _, incl = augmentation_ideal(group)
        tensored = ShortExact(tensor_hom(incl, identity), tensor_hom(augmentation(group), identity))
        b = tate(n, 0).class_of(Cochain(n, 0, [1]))
        self.assertFalse(b.is_zero())
        a = abelianization_to_tate(group, 1)
        delta_a = connecting(augmentation_sequence(group), -2)(a)
        self.assertEqual(cup(delta_a, b), connecting(tensored, -2)(cup(a, b)))
        self.assertFalse(cup(delta_a, b).is_zero())

    def test_delta_of_right_factor(self):
        # a ⌣ δb = (-1)^r δ(a ⌣ b) with a in degree 1 and b = [σ] in degree -2
        group = cyclic(2)
        m = twisted_cyclic(group, 0, -1)
        identity = GModuleHom.identity(m)
        _, incl = augmentation_ideal(group)
        tensored = ShortExact(tensor_hom(identity, incl), tensor_hom(identity, augmentation(group)))
        a = tate(m, 1).generators()[0]
        sigma = abelianization_to_tate(group, 1)
        delta_sigma = connecting(augmentation_sequence(group), -2)(sigma)
        left = cup(a, delta_sigma)
        self.assertFalse(left.is_zero())
        self.assertEqual(left, -connecting(tensored, -1)(cup(a, sigma)))


if __name__ == "__main__":
    unittest.main()
