import random
import unittest

from local_reciprocity.cohomology.coh_group import COMPLEX_CACHE_SIZE, clear_cache, tate, tate_complex
from local_reciprocity.gmodule.constructions import integers
from local_reciprocity.group.finite_group import cyclic
from local_reciprocity.suites import (
    cor_res_task,
    long_exactness_task,
    periodicity_top_task,
    run_suite,
)


class TestSuiteTasks(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        print("Setting up seeded generators for suite task tests")
        cls.seed = 20240917

    @classmethod
    def tearDownClass(cls):
        print("Dropping cached Tate complexes after suite task tests")
        clear_cache()

    def test_cor_res_on_group_ring_plus_torsion(self):
        print("==== test cor res on group ring plus torsion =====")
        report = cor_res_task(random.Random(self.seed))
        # three subgroup pairs, degrees 1 and 2, all on Z[G] + Z/8
        self.assertEqual(len(report.checks), 6)
        self.assertTrue(all("Z/8" in check.name for check in report.checks))
        self.assertTrue(report.passed, report.failed_checks)

    def test_long_exactness_up_to_degree_two(self):
        print("==== test long exactness up to degree two =====")
        report = long_exactness_task(random.Random(self.seed))
        self.assertEqual(len(report.checks), 10)
        self.assertTrue(report.passed, report.failed_checks)

    def test_periodicity_in_degree_one_for_orders_five_and_six(self):
        """H^1 = H^3 over Z/5 and Z/6, the degree the 20-module sweep stops short of."""
        print("==== test periodicity in degree one for orders five and six =====")
        report = periodicity_top_task(random.Random(self.seed))
        self.assertEqual(len(report.checks), 2)
        self.assertIn("Z/5", report.checks[0].name)
        self.assertIn("Z/6", report.checks[1].name)
        self.assertTrue(report.passed, report.failed_checks)


class TestComplexCache(unittest.TestCase):

    def setUp(self):
        clear_cache()

    def test_cache_is_bounded(self):
        print("==== test cache is bounded =====")
        self.assertEqual(tate_complex.cache_info().maxsize, COMPLEX_CACHE_SIZE)

    def test_repeated_module_then_same_complex(self):
        print("==== test repeated module then same complex =====")
        module = integers(cyclic(3))
        self.assertIs(tate_complex(module), tate_complex(integers(cyclic(3))))

    def test_suite_run_then_cache_emptied(self):
        print("==== test suite run then cache emptied =====")
        tate(integers(cyclic(2)), 0)
        self.assertGreater(tate_complex.cache_info().currsize, 0)
        report = run_suite("hilbert90", seed=7, workers=2)
        self.assertTrue(report.passed, report.failed_checks)
        self.assertEqual(tate_complex.cache_info().currsize, 0)


if __name__ == "__main__":
    unittest.main()
