"""Unit tests for cochain and chain tables."""

import json
import unittest

from local_reciprocity.cohomology.cochain import ChainElement, Cochain, coboundary, is_cocycle
from local_reciprocity.cohomology.splitting import carry_cocycle
from local_reciprocity.gmodule.constructions import integers, twisted_cyclic
from local_reciprocity.group.finite_group import cyclic
from local_reciprocity.utils.errors import NonComposable


class TestCochain(unittest.TestCase):
    """Tables, coboundaries and the JSON form."""

    def test_value_lookup(self):
        module = twisted_cyclic(cyclic(3), 7, 2)
        phi = Cochain.from_function(module, 2, lambda tup: [tup[0] * 3 + tup[1]])
        self.assertEqual(phi.value((2, 1)).coords, (0,))
        self.assertEqual(phi.value((1, 2)).coords, (5,))
        self.assertEqual(len(list(phi.items())), 9)

    def test_carry_cocycle_is_cocycle(self):
        for n in (2, 3, 4):
            self.assertTrue(is_cocycle(carry_cocycle(n)))

    def test_constant_cochain_is_not_cocycle(self):
        phi = Cochain.from_function(integers(cyclic(2)), 1, lambda tup: [1])
        self.assertFalse(phi.is_cocycle())

    def test_coboundary_is_cocycle(self):
        module = twisted_cyclic(cyclic(4), 5, 2)
        eta = Cochain.from_function(module, 1, lambda tup: [tup[0] + 1])
        self.assertTrue(is_cocycle(coboundary(eta)))
        self.assertEqual(coboundary(eta).degree, 2)

    def test_degree_zero_coboundary_is_difference(self):
        module = twisted_cyclic(cyclic(4), 5, 2)
        m = Cochain(module, 0, [1])
        self.assertEqual([m.coboundary().value((g,)).coords[0] for g in range(4)], [0, 1, 3, 2])

    def test_arithmetic(self):
        phi = carry_cocycle(3)
        self.assertTrue((phi - phi).is_zero())
        self.assertEqual(phi + phi, 2 * phi)
        self.assertEqual(-phi + phi, Cochain.zero(phi.module, 2))
        with self.assertRaises(NonComposable):
            phi + Cochain.zero(phi.module, 1)

    def test_json_round_trip(self):
        phi = carry_cocycle(2)
        data = json.loads(json.dumps(phi.serialize(), sort_keys=True))
        self.assertEqual(data["degree"], 2)
        self.assertEqual(data["table"]["1,1"], ["1"])
        self.assertEqual(Cochain.from_json(data), phi)

    def test_chain_element(self):
        chain = ChainElement.from_function(integers(cyclic(3)), 1, lambda tup: [tup[0]])
        self.assertEqual(chain.coefficient((2,)).coords, (2,))
        self.assertNotEqual(chain, Cochain(chain.module, 1, chain.vector.coords))


if __name__ == "__main__":
    unittest.main()
