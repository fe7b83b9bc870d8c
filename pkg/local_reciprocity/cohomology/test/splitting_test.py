"""Unit tests for splitting modules and the explicit reciprocity map."""

import unittest

from local_reciprocity.cohomology.coh_group import tate
from local_reciprocity.cohomology.cochain import Cochain
from local_reciprocity.cohomology.splitting import (
    abelianization_to_tate,
    carry_cocycle,
    embedded_cocycle,
    integer_cohomology_check,
    reciprocity_from_cocycle,
    shapiro_check,
    splitting_cochain,
    splitting_module,
    tate_composite,
)
from local_reciprocity.gmodule.constructions import (
    augmentation_ideal,
    direct_sum_modules,
    integers,
)
from local_reciprocity.group.finite_group import cyclic, klein, symmetric3
from local_reciprocity.utils.errors import NotACocycle


class TestSplittingModule(unittest.TestCase):
    """C(φ) and its sequence 0 -> C -> C(φ) -> I_G -> 0."""

    def test_zero_cocycle_then_direct_sum(self):
        group = cyclic(3)
        z = integers(group)
        cphi, _ = splitting_module(z, Cochain.zero(z, 2))
        ig, _ = augmentation_ideal(group)
        self.assertEqual(cphi, direct_sum_modules(z, ig)[0])

    def test_fundamental_class_then_acyclic(self):
        for n in (2, 3):
            phi = carry_cocycle(n)
            cphi, _ = splitting_module(phi.module, phi)
            self.assertTrue(tate(cphi, 1).is_trivial(), f"n={n}")
            self.assertTrue(tate(cphi, 2).is_trivial(), f"n={n}")

    def test_splitting_cochain_bounds_phi(self):
        phi = carry_cocycle(3)
        _, se = splitting_module(phi.module, phi)
        self.assertEqual(splitting_cochain(se, phi).coboundary(), embedded_cocycle(se, phi))

    def test_non_cocycle_then_rejected(self):
        z = integers(cyclic(2))
        phi = Cochain.from_function(z, 2, lambda tup: [1 if tup == (0, 0) else 0])
        with self.assertRaises(NotACocycle):
            splitting_module(z, phi)
        with self.assertRaises(NotACocycle):
            reciprocity_from_cocycle(phi, 1)


class TestReciprocity(unittest.TestCase):
    """σ ↦ Σ_τ φ(τ, σ) against the composite of connecting maps."""

    def test_composite_matches_explicit_formula(self):
        for n in (2, 3, 4):
            group = cyclic(n)
            phi = carry_cocycle(n)
            _, se = splitting_module(phi.module, phi)
            composite = tate_composite(se)
            self.assertTrue(composite.is_isomorphism(), f"n={n}")
            for sigma in group.elements():
                self.assertEqual(composite(abelianization_to_tate(group, sigma)),
                                 reciprocity_from_cocycle(phi, sigma), f"n={n} σ={sigma}")

    def test_identity_then_zero(self):
        self.assertTrue(reciprocity_from_cocycle(carry_cocycle(4), 0).is_zero())

    def test_generator_then_generates(self):
        for n in (2, 3, 5):
            self.assertEqual(reciprocity_from_cocycle(carry_cocycle(n), 1).order(), n)

    def test_coboundary_then_trivial_map(self):
        z = integers(cyclic(3))
        phi = Cochain.from_function(z, 1, lambda tup: [tup[0] * tup[0] + 1]).coboundary()
        for sigma in range(3):
            self.assertTrue(reciprocity_from_cocycle(phi, sigma).is_zero())


class TestIntegerCohomology(unittest.TestCase):
    """Standard facts about H^*(G, Z) and Shapiro's lemma."""

    def test_integer_cohomology_check(self):
        for group in (cyclic(4), klein(), symmetric3()):
            checks = integer_cohomology_check(group)
            self.assertEqual(len(checks), 5 if group.exponent() > 1 else 4)
            for check in checks:
                self.assertTrue(check.passed, f"{group.name}: {check.name} {check.details}")

    def test_shapiro(self):
        subgroup = cyclic(4).subgroup([0, 2])
        h_group, _ = subgroup.as_group()
        for r in (1, 2):
            self.assertTrue(shapiro_check(subgroup, integers(h_group), r).passed)


if __name__ == "__main__":
    unittest.main()
