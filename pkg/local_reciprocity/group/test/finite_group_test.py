"""Unit tests for finite groups, subgroups and the abelianization oracle."""

import unittest

from local_reciprocity.abgroup.fg_ab_group import FgAbGroup
from local_reciprocity.group.finite_group import (
    FiniteGroup,
    abelianization_oracle,
    cyclic,
    direct_product,
    klein,
    symmetric3,
)
from local_reciprocity.utils.errors import InvalidGroup, NotNormal


def order_multiset(group: FiniteGroup) -> list:
    return sorted(group.element_order(a) for a in group.elements())


class TestConstructors(unittest.TestCase):
    """Named group constructors."""

    def test_cyclic_tables(self):
        self.assertEqual(cyclic(1).order, 1)
        self.assertEqual(cyclic(4).mult[3][2], 1)
        self.assertEqual(cyclic(6).inv(2), 4)
        self.assertEqual(cyclic(6).cyclic_generator(), 1)

    def test_cyclic_zero_then_rejected(self):
        with self.assertRaises(InvalidGroup):
            cyclic(0)

    def test_klein_every_element_self_inverse(self):
        group = klein()
        self.assertEqual(group.order, 4)
        self.assertTrue(all(group.inv(a) == a for a in group.elements()))
        self.assertFalse(group.is_cyclic())

    def test_product_names(self):
        self.assertEqual(klein().name, "klein")
        self.assertEqual(direct_product(cyclic(2), cyclic(3)).name, "Z/2xZ/3")
        self.assertEqual(direct_product(cyclic(2), cyclic(3), name="six").name, "six")

    def test_product_of_coprime_cyclic_then_cyclic(self):
        group = direct_product(cyclic(2), cyclic(3))
        self.assertEqual(order_multiset(group), order_multiset(cyclic(6)))
        self.assertTrue(group.is_cyclic())

    def test_trivial_times_group_then_same_orders(self):
        group = direct_product(cyclic(1), symmetric3())
        self.assertEqual(order_multiset(group), order_multiset(symmetric3()))

    def test_symmetric3(self):
        group = symmetric3()
        self.assertEqual(group.order, 6)
        self.assertFalse(group.is_abelian())
        involutions = [a for a in group.elements() if a != group.identity and group.inv(a) == a]
        self.assertEqual(len(involutions), 3)
        self.assertEqual(group.commutator_subgroup().order, 3)
        self.assertEqual(group.exponent(), 6)


class TestValidation(unittest.TestCase):
    """Tables that are not groups are rejected."""

    def test_non_latin_table_then_rejected(self):
        with self.assertRaises(InvalidGroup):
            FiniteGroup([[0, 1], [1, 1]])

    def test_non_associative_table_then_rejected(self):
        # a Latin square with identity 0 that is not associative
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with self.assertRaises(InvalidGroup):
            FiniteGroup(table)

    def test_bad_subgroup_then_rejected(self):
        with self.assertRaises(InvalidGroup):
            cyclic(4).subgroup([0, 1])
        with self.assertRaises(InvalidGroup):
            cyclic(4).subgroup([1, 3])

    def test_json_round_trip(self):
        group = symmetric3()
        self.assertEqual(FiniteGroup.from_json(group.serialize()), group)


class TestSubgroups(unittest.TestCase):
    """Cosets, normality and quotients."""

    @classmethod
    def setUpClass(cls):
        cls.s3 = symmetric3()
        cls.a3 = cls.s3.commutator_subgroup()

    def test_cosets_partition_the_group(self):
        for group, subgroup in ((cyclic(6), cyclic(6).subgroup([0, 3])), (self.s3, self.a3),
                                (self.s3, self.s3.generated_subgroup([1]))):
            covered = []
            for g in subgroup.coset_representatives:
                covered.extend(group.op(g, h) for h in subgroup.elements)
            self.assertEqual(sorted(covered), list(group.elements()))
            self.assertEqual(subgroup.coset_representatives[0], group.identity)

    def test_right_coset_decomposition(self):
        subgroup = self.s3.generated_subgroup([1])
        for x in self.s3.elements():
            h, j = subgroup.right_coset_decomposition(x)
            self.assertIn(h, subgroup)
            s_j = self.s3.inv(subgroup.coset_representatives[j])
            self.assertEqual(self.s3.op(h, s_j), x)

    def test_normality(self):
        self.assertTrue(self.a3.is_normal())
        self.assertFalse(self.s3.generated_subgroup([1]).is_normal())
        with self.assertRaises(NotNormal):
            self.s3.generated_subgroup([1]).quotient()

    def test_quotient_of_cyclic(self):
        group = cyclic(6)
        quotient, projection = group.subgroup([0, 2, 4]).quotient()
        self.assertEqual(quotient.order, 2)
        self.assertEqual(projection[1], projection[3])
        self.assertNotEqual(projection[0], projection[1])

    def test_as_group_keeps_identity_first(self):
        group, embedding = self.a3.as_group()
        self.assertEqual(group.order, 3)
        self.assertEqual(group.identity, 0)
        self.assertEqual(embedding[0], self.s3.identity)
        self.assertTrue(group.is_cyclic())


class TestAbelianization(unittest.TestCase):
    """Brute-force G^ab."""

    def test_s3_then_z2(self):
        self.assertEqual(abelianization_oracle(symmetric3()), FgAbGroup((2,)))

    def test_abelian_groups_are_their_own_abelianization(self):
        self.assertEqual(abelianization_oracle(cyclic(6)), FgAbGroup((6,)))
        self.assertEqual(abelianization_oracle(klein()), FgAbGroup((2, 2)))
        self.assertEqual(abelianization_oracle(direct_product(cyclic(2), cyclic(4))),
                         FgAbGroup((2, 4)))
        self.assertTrue(abelianization_oracle(cyclic(1)).is_trivial())


if __name__ == "__main__":
    unittest.main()
