from orbicount.euler import generating
from orbicount.euler.gset import point_gset, regular_gset
from orbicount.testing import OrbicountTestCase
from orbicount.utils import partition_numbers


class EulerProductTestCase(OrbicountTestCase):

    def test_partitions(self):
        report = generating.verify_euler_product(point_gset(self.group('trivial')), self.gamma('z'), 7)
        self.assertEqual(report.lhs, partition_numbers(7))
        self.assertEqual(report.rhs, report.lhs)
        self.assertTrue(report.passed)
        identities = [check.identity for check in report.checks]
        self.assertEqual(identities, ['euler-product', 'burnside-equivalence', 'hecke-form',
                                      'abelian-subgroups', 'symmetric-product', 'partition-class-count'])
        burnside = report.checks[1]
        self.assertEqual(burnside.inputs['max_degree'], 6)
        self.assertEqual(burnside.rhs, partition_numbers(6))
        self.assertTrue(all(check.equation for check in report.checks))

    def test_burnside_degree(self):
        self.assertEqual(generating.burnside_degree(self.group('trivial'), self.gamma('z'), 10), 6)
        self.assertEqual(generating.burnside_degree(self.group('s3'), self.gamma('z'), 4), 3)
        self.assertEqual(generating.burnside_degree(self.group('s3'), self.gamma('z2'), 3), 2)
        self.assertEqual(generating.burnside_degree(self.group('trivial'), self.gamma('f2'), 4), 4)
        self.assertEqual(generating.burnside_degree(self.group('s3'), self.gamma('z'), 4,
                                                    {'MAX_BURNSIDE_PAIRS': 10 ** 12}), 4)

    def test_wreath_class_numbers(self):
        lhs = generating.lhs_coefficients(point_gset(self.group('s3')), self.gamma('z'), 2)
        self.assertEqual(lhs, [1, 3, 9])

    def test_small_products(self):
        z2 = self.group('z2')
        for gset, gamma, N in ((regular_gset(z2), 'z', 3),
                               (point_gset(z2), 'z2', 2),
                               (point_gset(z2), 'f2', 2)):
            report = generating.verify_euler_product(gset, self.gamma(gamma), N)
            self.assertPassed(report.checks)

    def test_free_group_has_no_abelian_form(self):
        report = generating.verify_euler_product(point_gset(self.group('trivial')), self.gamma('f2'), 3)
        identities = [check.identity for check in report.checks]
        self.assertNotIn('abelian-subgroups', identities)
        self.assertNotIn('symmetric-product', identities)
        self.assertTrue(report.passed)

    def test_subgroup_exponents(self):
        exponents = generating.subgroup_exponents(point_gset(self.group('s3')), self.gamma('z'), 3)
        self.assertEqual(exponents, [(1, 3), (2, 3), (3, 3)])

    def test_double_count(self):
        checks = generating.verify_double_count(regular_gset(self.group('z2')), self.gamma('f2'), 2)
        self.assertPassed(checks)
        self.assertEqual(checks[0].lhs, checks[0].rhs)
        self.assertEqual(checks[0].rhs, 4)

    def test_default_degree(self):
        self.assertEqual(generating.default_degree(self.gamma('z'), self.group('trivial')), 8)
        self.assertEqual(generating.default_degree(self.gamma('f2'), self.group('trivial')), 4)
        self.assertEqual(generating.default_degree(self.gamma('z2'), self.group('s3')), 3)
