import itertools
import unittest

from orbicount.exceptions import LimitExceeded
from orbicount.group.finite import CyclicGroup, conjugacy_classes, symmetric_group, validate_group
from orbicount.group.wreath import WreathElement, wreath_action, wreath_product
from orbicount.utils import partition_numbers


class WreathProductTestCase(unittest.TestCase):

    def test_orders(self):
        self.assertEqual(wreath_product(CyclicGroup(2), 3).order, 48)
        self.assertEqual(wreath_product(symmetric_group(3), 3).order, 1296)
        self.assertEqual(wreath_product(CyclicGroup(1), 4).order, 24)
        with self.assertRaises(LimitExceeded):
            wreath_product(symmetric_group(3), 6)

    def test_encode_decode(self):
        W = wreath_product(CyclicGroup(3), 3)
        element = WreathElement((2, 0, 1), (1, 2, 0))
        self.assertEqual(W.decode(W.encode(element)), element)
        self.assertEqual(W.decode(W.identity), WreathElement((0, 0, 0), (0, 1, 2)))
        self.assertEqual(W.permutation(W.encode(element)), (1, 2, 0))

    def test_product_law(self):
        W = wreath_product(CyclicGroup(2), 2)
        a = W.encode(WreathElement((1, 0), (0, 1)))
        b = W.encode(WreathElement((0, 0), (1, 0)))
        self.assertEqual(W.decode(W.mul(a, b)), WreathElement((1, 0), (1, 0)))
        self.assertEqual(W.decode(W.mul(b, a)), WreathElement((0, 1), (1, 0)))
        validate_group(W)

    def test_inverse(self):
        W = wreath_product(symmetric_group(3), 2)
        for x in range(W.order):
            self.assertEqual(W.mul(x, W.inverse(x)), W.identity)

    def test_class_numbers(self):
        # Z2 wr S2 is dihedral of order 8
        self.assertEqual(len(conjugacy_classes(wreath_product(CyclicGroup(2), 2))), 5)
        self.assertEqual(len(conjugacy_classes(wreath_product(symmetric_group(3), 3))), 22)

    def test_action_is_a_left_action(self):
        W = wreath_product(CyclicGroup(2), 2)
        action = [[0, 1], [1, 0]]
        points = list(itertools.product(range(2), repeat=2))
        for a in range(W.order):
            for b in range(W.order):
                ab = W.decode(W.mul(a, b))
                for x in points:
                    inner = wreath_action(W.decode(b), x, action)
                    self.assertEqual(wreath_action(ab, x, action),
                                     wreath_action(W.decode(a), inner, action))

    def test_action_is_a_left_action_on_three_points(self):
        s3 = symmetric_group(3)
        W = wreath_product(s3, 2)
        action = s3.perms.tolist()
        points = list(itertools.product(range(3), repeat=2))
        elements = [W.decode(x) for x in range(W.order)]
        for a in range(W.order):
            for b in range(W.order):
                ab = elements[W.mul(a, b)]
                for x in points:
                    inner = wreath_action(elements[b], x, action)
                    self.assertEqual(wreath_action(ab, x, action),
                                     wreath_action(elements[a], inner, action))

    def test_symmetric_class_numbers_are_partitions(self):
        trivial = CyclicGroup(1)
        classes = [len(conjugacy_classes(wreath_product(trivial, n))) for n in range(1, 8)]
        self.assertEqual(classes, partition_numbers(7)[1:])
