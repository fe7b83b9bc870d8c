"""Unit tests for finite fields, their norms and traces, and the residue modules."""

import unittest

from local_reciprocity.abgroup.fg_ab_group import FgAbGroup
from local_reciprocity.cohomology.coh_group import cohomology, tate
from local_reciprocity.localfield.finite_field import (
    build_finite_field,
    ff_norm,
    ff_trace,
    residue_additive_module,
    residue_unit_module,
)
from local_reciprocity.utils.errors import FieldCapExceeded


class TestFiniteField(unittest.TestCase):
    """Modulus choice, arithmetic and the multiplicative structure."""

    @classmethod
    def setUpClass(cls):
        print("Building F_4 and F_8 for finite field tests")
        cls.f4 = build_finite_field(2, 2)
        cls.f8 = build_finite_field(2, 3)
        cls.f9 = build_finite_field(3, 2)

    def test_modulus_is_first_irreducible(self):
        print("==== test modulus is first irreducible =====")
        self.assertEqual(build_finite_field(3, 1).modulus, [1, 0])
        self.assertEqual(self.f4.modulus, [1, 1, 1])
        self.assertEqual(self.f9.modulus, [1, 0, 1])
        for field in (self.f4, self.f8, self.f9, build_finite_field(5, 3)):
            self.assertTrue(field.verify_modulus(), field)

    def test_bad_parameters_then_rejected(self):
        print("==== test bad parameters then rejected =====")
        with self.assertRaises(ValueError):
            build_finite_field(4, 1)
        with self.assertRaises(ValueError):
            build_finite_field(3, 0)
        with self.assertRaises(FieldCapExceeded):
            build_finite_field(2, 7)
        with self.assertRaises(FieldCapExceeded):
            build_finite_field(1009, 2)

    def test_arithmetic(self):
        print("==== test arithmetic =====")
        x = self.f9.gen()
        self.assertEqual(x * x, self.f9.scalar(-1))
        self.assertEqual(x + x + x, self.f9.zero())
        for e in self.f9.units():
            self.assertEqual(e * e.inverse(), self.f9.one())
        self.assertEqual(len(list(self.f8.elements())), 8)

    def test_frobenius_has_order_f(self):
        print("==== test frobenius has order f =====")
        for e in self.f8.elements():
            self.assertEqual(e.frobenius(), e**2)
            self.assertEqual(e.frobenius(3), e)
        self.assertTrue(self.f9.scalar(2).in_subfield(1))
        self.assertFalse(self.f9.gen().in_subfield(1))

    def test_primitive_element_and_discrete_log(self):
        print("==== test primitive element and discrete log =====")
        self.assertEqual(self.f4.primitive_element(), self.f4.gen())
        g = self.f9.primitive_element()
        self.assertEqual(len({g**k for k in range(8)}), 8)
        for k in range(8):
            self.assertEqual(self.f9.discrete_log(g**k), k)
        with self.assertRaises(ValueError):
            self.f9.discrete_log(self.f9.zero())


class TestNormTrace(unittest.TestCase):
    """Nm and Tr from F_{p^f} to its subfields."""

    @classmethod
    def setUpClass(cls):
        print("Building F_9 for norm and trace tests")
        cls.f9 = build_finite_field(3, 2)

    def test_norm_is_power(self):
        print("==== test norm is power =====")
        for e in self.f9.elements():
            self.assertEqual(ff_norm(e), e**4)
        self.assertTrue(ff_norm(self.f9.zero()).is_zero())

    def test_norm_is_surjective_and_multiplicative(self):
        print("==== test norm is surjective and multiplicative =====")
        norms = {ff_norm(e) for e in self.f9.units()}
        self.assertEqual(norms, {self.f9.scalar(1), self.f9.scalar(2)})
        a, b = self.f9.gen(), self.f9.from_int(5)
        self.assertEqual(ff_norm(a * b), ff_norm(a) * ff_norm(b))

    def test_trace(self):
        print("==== test trace =====")
        self.assertTrue(ff_trace(self.f9.zero()).is_zero())
        self.assertEqual({ff_trace(e) for e in self.f9.elements()},
                         {self.f9.scalar(c) for c in range(3)})
        self.assertEqual(ff_trace(self.f9.scalar(2)), self.f9.scalar(4))
        a, b = self.f9.gen(), self.f9.from_int(7)
        self.assertEqual(ff_trace(a + b), ff_trace(a) + ff_trace(b))

    def test_relative_norm_lands_in_subfield(self):
        print("==== test relative norm lands in subfield =====")
        field = build_finite_field(2, 4)
        for e in list(field.units())[:6]:
            self.assertTrue(ff_norm(e, 2).in_subfield(2))
            self.assertTrue(ff_trace(e, 2).in_subfield(2))

    def test_degree_not_dividing_then_rejected(self):
        print("==== test degree not dividing then rejected =====")
        with self.assertRaises(ValueError):
            ff_norm(self.f9.gen(), 3)
        with self.assertRaises(ValueError):
            ff_trace(self.f9.gen(), 0)


class TestResidueModules(unittest.TestCase):
    """F^× and F^+ as Galois modules: Hilbert 90 and the normal basis consequence."""

    def test_unit_module(self):
        print("==== test unit module =====")
        module = residue_unit_module(build_finite_field(3, 2))
        self.assertEqual(module.name, "F_3^2 units")
        self.assertEqual(module.underlying, FgAbGroup.cyclic(8))
        self.assertEqual(module.group.order, 2)
        self.assertTrue(cohomology(module, 1).is_trivial())
        self.assertTrue(tate(module, 0).is_trivial())

    def test_additive_module(self):
        print("==== test additive module =====")
        for p, f in ((2, 2), (2, 3), (3, 2)):
            module = residue_additive_module(build_finite_field(p, f))
            for r in (1, 2):
                self.assertTrue(cohomology(module, r).is_trivial(), f"p={p} f={f} r={r}")


if __name__ == "__main__":
    unittest.main()
