import unittest

import numpy as np

from orbicount.exceptions import InvalidInput, LimitExceeded
from orbicount.group import finite


class PermutationTestCase(unittest.TestCase):

    def test_compose_and_invert(self):
        self.assertEqual(finite.compose((1, 2, 0), (1, 0, 2)), (2, 1, 0))
        self.assertEqual(finite.invert((1, 2, 0)), (2, 0, 1))
        self.assertEqual(finite.compose((1, 2, 0), finite.invert((1, 2, 0))), (0, 1, 2))

    def test_cycle_string(self):
        self.assertEqual(finite.cycle_string((0, 1, 2)), '()')
        self.assertEqual(finite.cycle_string((1, 2, 0)), '(1 2 3)')
        self.assertEqual(finite.cycle_string((1, 0, 3, 2)), '(1 2)(3 4)')


class FiniteGroupTestCase(unittest.TestCase):

    def setUp(self):
        self.s3 = finite.symmetric_group(3)

    def test_symmetric_group(self):
        self.assertEqual(self.s3.order, 6)
        self.assertEqual(self.s3.identity, 0)
        self.assertEqual(self.s3.perm(3), (1, 2, 0))
        self.assertEqual(self.s3.index_of((2, 1, 0)), 5)
        self.assertEqual(finite.subgroup_generated(self.s3, self.s3.generators), list(range(6)))
        finite.validate_group(self.s3)

    def test_products_follow_composition(self):
        for a in range(6):
            for b in range(6):
                expected = finite.compose(self.s3.perm(a), self.s3.perm(b))
                self.assertEqual(self.s3.perm(self.s3.mul(a, b)), expected)
        self.assertEqual(self.s3.inverse(3), 4)

    def test_materialized_table_agrees(self):
        s4 = finite.symmetric_group(4)
        lazy = s4.mul_array(s4.elements[:, None], s4.elements[None, :])
        s4.materialize()
        self.assertTrue(s4.has_table)
        self.assertTrue(np.array_equal(s4.table, lazy))

    def test_conjugacy_classes(self):
        classes = finite.conjugacy_classes(self.s3)
        self.assertEqual(classes.representatives, [0, 1, 3])
        self.assertEqual(classes.class_sizes, [1, 3, 2])
        self.assertEqual(classes.members(2), [3, 4])
        self.assertEqual(len(finite.conjugacy_classes(finite.symmetric_group(4))), 5)

    def test_centralizer(self):
        self.assertEqual(finite.centralizer(self.s3, [1]), [0, 1])
        self.assertEqual(finite.centralizer(self.s3, [3]), [0, 3, 4])
        self.assertEqual(finite.centralizer(self.s3, []), list(range(6)))

    def test_element_order(self):
        self.assertEqual(finite.element_order(self.s3, 0), 1)
        self.assertEqual(finite.element_order(self.s3, 5), 2)
        self.assertEqual(finite.element_order(self.s3, 4), 3)

    def test_cyclic_and_products(self):
        z4 = finite.CyclicGroup(4)
        self.assertEqual(z4.mul(3, 2), 1)
        self.assertEqual(z4.inverse(1), 3)
        self.assertTrue(finite.is_abelian(z4))
        self.assertFalse(finite.is_abelian(self.s3))
        self.assertEqual(finite.CyclicGroup(1).name, 'trivial')
        klein = finite.direct_product(finite.CyclicGroup(2), finite.CyclicGroup(2))
        self.assertEqual(klein.order, 4)
        self.assertTrue(all(klein.mul(g, g) == klein.identity for g in range(4)))
        triple = finite.direct_product(finite.CyclicGroup(2), finite.CyclicGroup(3), self.s3)
        self.assertEqual(triple.order, 36)
        finite.validate_group(triple)

    def test_permutation_group(self):
        # the cyclic subgroup of S4 generated by a 4-cycle
        c4 = finite.permutation_group([(1, 2, 3, 0)], 4)
        self.assertEqual(c4.order, 4)
        self.assertTrue(finite.is_abelian(c4))
        with self.assertRaises(InvalidInput):
            finite.permutation_group([(0, 0, 1)], 3)

    def test_table_group(self):
        z3 = finite.TableGroup([[0, 1, 2], [1, 2, 0], [2, 0, 1]], labels=['e', 'a', 'b'])
        finite.validate_group(z3)
        self.assertEqual(z3.label(1), 'a')
        self.assertEqual(z3.inverse(1), 2)
        self.assertEqual(z3.generators, (1,))
        with self.assertRaises(InvalidInput):
            finite.TableGroup([[1, 0], [0, 0]])
        with self.assertRaises(InvalidInput):
            finite.validate_group(finite.TableGroup([[0, 1], [1, 1]]))

    def test_limits(self):
        with self.assertRaises(LimitExceeded):
            finite.symmetric_group(10)
        with self.assertRaises(LimitExceeded):
            finite.TableGroup(np.zeros((3, 3), dtype=int), max_order=2)
