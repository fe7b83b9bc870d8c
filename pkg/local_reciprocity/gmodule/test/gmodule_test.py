"""Unit tests for GModule, GModuleHom and the standard constructions."""

import unittest

from local_reciprocity.abgroup.fg_ab_group import AbHom, FgAbGroup
from local_reciprocity.abgroup.homology import homology_at, kernel
from local_reciprocity.gmodule.constructions import (
    augmentation,
    augmentation_ideal,
    coinduced,
    coinvariants,
    direct_sum_modules,
    fixed_point_module,
    fixed_points,
    group_ring,
    induced,
    induced_coinduced_iso,
    induced_norm,
    integers,
    j_module,
    norm_inclusion,
    norm_map,
    restrict_module,
    tensor_z,
    trivial_module,
    twisted_cyclic,
)
from local_reciprocity.gmodule.gmodule import GModule, GModuleHom
from local_reciprocity.group.finite_group import cyclic, klein, symmetric3
from local_reciprocity.utils.errors import InvalidModule


class TestGModule(unittest.TestCase):
    def test_trivial_module(self):
        module = trivial_module(cyclic(4), FgAbGroup((0,)))
        self.assertTrue(module.is_trivial_action())
        module = trivial_module(symmetric3(), FgAbGroup((5,)))
        self.assertEqual(module.underlying, FgAbGroup((5,)))
        self.assertTrue(trivial_module(cyclic(1), FgAbGroup((2, 0))).is_trivial_action())

    def test_incompatible_action_then_rejected(self):
        # σ acting by 2 on Z/5 has order 4, not 2
        with self.assertRaises(InvalidModule):
            GModule(cyclic(2), FgAbGroup((5,)), [[[1]], [[2]]])

    def test_non_invertible_action_then_rejected(self):
        with self.assertRaises(InvalidModule):
            GModule(cyclic(2), FgAbGroup((0,)), [[[1]], [[0]]])

    def test_twisted_cyclic(self):
        module = twisted_cyclic(cyclic(4), 5, 2)
        self.assertEqual(module.matrix(1).tolist(), [[2]])
        self.assertEqual(module.matrix(3).tolist(), [[3]])
        with self.assertRaises(InvalidModule):
            twisted_cyclic(cyclic(3), 5, 2)
        with self.assertRaises(InvalidModule):
            twisted_cyclic(klein(), 3, 2)

    def test_json_round_trip(self):
        module = twisted_cyclic(cyclic(2), 0, -1)
        self.assertEqual(GModule.from_json(module.serialize()), module)

    def test_non_equivariant_map_then_rejected(self):
        ring = group_ring(cyclic(2))
        with self.assertRaises(InvalidModule):
            GModuleHom(ring, integers(cyclic(2)), [[1, 0]])


class TestGroupRing(unittest.TestCase):
    def test_group_ring_of_z2_swaps(self):
        ring = group_ring(cyclic(2))
        self.assertEqual(ring.matrix(1).tolist(), [[0, 1], [1, 0]])
        self.assertEqual(group_ring(symmetric3()).underlying, FgAbGroup.free(6))

    def test_augmentation_is_equivariant(self):
        epsilon = augmentation(symmetric3())
        for g in symmetric3().elements():
            self.assertEqual(epsilon.hom @ epsilon.source.action[g], epsilon.hom)

    def test_augmentation_ideal_of_z2(self):
        ig, incl = augmentation_ideal(cyclic(2))
        self.assertEqual(ig.matrix(1).tolist(), [[-1]])
        self.assertTrue((augmentation(cyclic(2)).hom @ incl.hom).is_zero())

    def test_augmentation_sequence_is_exact(self):
        for group in (cyclic(3), klein(), symmetric3()):
            ig, incl = augmentation_ideal(group)
            self.assertEqual(ig.underlying.rank, group.order - 1)
            epsilon = augmentation(group)
            self.assertTrue(incl.hom.is_injective())
            self.assertTrue(epsilon.hom.is_surjective())
            self.assertTrue(homology_at(incl.hom, epsilon.hom).group.is_trivial())

    def test_j_module(self):
        jg, proj = j_module(cyclic(2))
        self.assertEqual(jg.matrix(1).tolist(), [[-1]])
        for group in (cyclic(4), symmetric3()):
            jg, proj = j_module(group)
            mu = norm_inclusion(group)
            self.assertTrue((proj.hom @ mu.hom).is_zero())
            self.assertEqual(jg.underlying.rank, group.order - 1)
            self.assertTrue(homology_at(mu.hom, proj.hom).group.is_trivial())
            self.assertTrue(proj.hom.is_surjective())

    def test_ideal_plus_z_has_group_ring_factors(self):
        group = symmetric3()
        ig, _ = augmentation_ideal(group)
        total, _, _ = direct_sum_modules(ig, integers(group))
        self.assertEqual(total.underlying, group_ring(group).underlying)


class TestTensor(unittest.TestCase):
    def test_gcd_rule(self):
        group = cyclic(2)
        product = tensor_z(trivial_module(group, FgAbGroup((4,))),
                           trivial_module(group, FgAbGroup((6,))))
        self.assertEqual(product.underlying, FgAbGroup((2,)))

    def test_unit_of_tensor(self):
        module = twisted_cyclic(cyclic(4), 5, 2)
        product = tensor_z(module, integers(cyclic(4)))
        self.assertEqual(product.underlying, module.underlying)
        self.assertEqual(product.action, module.action)

    def test_group_ring_tensor_rank(self):
        group = cyclic(3)
        product = tensor_z(group_ring(group), trivial_module(group, FgAbGroup((4, 0))))
        self.assertEqual(product.underlying, FgAbGroup((4, 4, 4, 0, 0, 0)))


class TestInducedModules(unittest.TestCase):
    def test_coinduced_from_whole_group_is_the_module(self):
        group = cyclic(4)
        module = twisted_cyclic(group, 5, 2)
        result = coinduced(group.whole(), module)
        self.assertEqual(result.action, module.action)

    def test_coinduced_from_trivial_subgroup(self):
        group = cyclic(3)
        trivial = group.trivial_subgroup()
        base, _ = trivial.as_group()
        result = coinduced(trivial, integers(base))
        self.assertEqual(result.underlying, FgAbGroup.free(3))

    def test_comparison_is_equivariant_isomorphism(self):
        for group, subgroup_elements in ((cyclic(2), [0]), (cyclic(4), [0, 2]),
                                         (symmetric3(), [0, 1])):
            subgroup = group.subgroup(subgroup_elements)
            h_group, _ = subgroup.as_group()
            iso = induced_coinduced_iso(subgroup, trivial_module(h_group, FgAbGroup((0, 4))))
            self.assertTrue(iso.hom.is_isomorphism())
            inverse = iso.hom.inverse()
            self.assertEqual(inverse @ iso.hom, AbHom.identity(iso.source.underlying))

    def test_induced_matches_group_ring_for_trivial_subgroup(self):
        group = symmetric3()
        trivial = group.trivial_subgroup()
        base, _ = trivial.as_group()
        self.assertEqual(induced(trivial, integers(base)).action, group_ring(group).action)

    def test_restriction_keeps_underlying(self):
        group = cyclic(4)
        module = twisted_cyclic(group, 5, 2)
        restricted = restrict_module(module, group.subgroup([0, 2]))
        self.assertEqual(restricted.group.order, 2)
        self.assertEqual(restricted.matrix(1).tolist(), [[4]])


class TestInvariants(unittest.TestCase):
    def test_fixed_points(self):
        group = cyclic(2)
        trivial = trivial_module(group, FgAbGroup((6,)))
        self.assertEqual(fixed_points(trivial)[0], FgAbGroup((6,)))
        sub, incl = fixed_points(group_ring(group))
        self.assertEqual(sub, FgAbGroup((0,)))
        image = incl(sub.generator(0)).coords
        self.assertIn(image, ((1, 1), (-1, -1)))
        ig, _ = augmentation_ideal(group)
        self.assertTrue(fixed_points(ig)[0].is_trivial())

    def test_coinvariants(self):
        group = cyclic(2)
        self.assertEqual(coinvariants(trivial_module(group, FgAbGroup((6,))))[0], FgAbGroup((6,)))
        self.assertEqual(coinvariants(group_ring(group))[0], FgAbGroup((0,)))
        jg, _ = j_module(group)
        self.assertEqual(coinvariants(jg)[0], FgAbGroup((2,)))

    def test_norm_map(self):
        group = cyclic(5)
        self.assertEqual(norm_map(integers(group)).matrix.tolist(), [[5]])
        ring = group_ring(group)
        nm = norm_map(ring)
        k, _ = kernel(nm)
        self.assertEqual(k.rank, 4)
        for g in group.elements():
            self.assertEqual(nm @ ring.action[g], nm)

    def test_norm_lands_in_fixed_points(self):
        group = symmetric3()
        _, incl = fixed_points(group_ring(group))
        nm = norm_map(group_ring(group))
        for x in group_ring(group).underlying.generators():
            self.assertTrue(incl.image_contains(nm(x)))

    def test_induced_norm_on_trivial_z(self):
        result = induced_norm(integers(cyclic(3)))
        self.assertEqual(result.matrix.tolist(), [[3]])

    def test_fixed_point_module_over_quotient(self):
        group = cyclic(4)
        module, incl, projection = fixed_point_module(group_ring(group), group.subgroup([0, 2]))
        self.assertEqual(module.group.order, 2)
        self.assertEqual(module.underlying, FgAbGroup.free(2))
        self.assertEqual(projection[1], projection[3])
        self.assertFalse(module.is_trivial_action())


if __name__ == "__main__":
    unittest.main()
