import unittest

from orbicount import utils
from orbicount.exceptions import BudgetExceeded, LimitExceeded


class UtilsTestCase(unittest.TestCase):

    def test_divisors(self):
        self.assertEqual(utils.divisors(1), [1])
        self.assertEqual(utils.divisors(12), [1, 2, 3, 4, 6, 12])
        self.assertEqual(utils.divisors(49), [1, 7, 49])
        with self.assertRaises(ValueError):
            utils.divisors(0)

    def test_sigma1(self):
        self.assertEqual([utils.sigma1(n) for n in range(1, 9)], [1, 3, 4, 7, 6, 12, 8, 15])

    def test_partition_numbers(self):
        self.assertEqual(utils.partition_numbers(10), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42])
        self.assertEqual(utils.partition_numbers(0), [1])

    def test_hall_counts(self):
        self.assertEqual(utils.hall_counts(1, 5), [1, 1, 1, 1, 1])
        self.assertEqual(utils.hall_counts(2, 6), [1, 3, 13, 71, 461, 3447])
        self.assertEqual(utils.hall_counts(3, 4), [1, 7, 97, 2143])

    def test_union_find(self):
        uf = utils.UnionFind(6)
        uf.union(0, 3)
        uf.union_many([1, 3], [4, 5])
        self.assertEqual(uf.find(5), uf.find(0))
        self.assertEqual(len(uf), 3)
        labels, count = uf.labels()
        self.assertEqual(count, 3)
        self.assertEqual(labels, [0, 1, 2, 0, 1, 0])

    def test_budget(self):
        now = [0.0]
        budget = utils.Budget(10, clock=lambda: now[0])
        budget.check('start')
        now[0] = 11.0
        with self.assertRaises(BudgetExceeded) as cm:
            budget.check('enumeration')
        self.assertEqual(cm.exception.stage, 'enumeration')
        self.assertEqual(cm.exception.exit_code, 3)
        utils.check_budget(None, 'anything')

    def test_ensure_within(self):
        utils.ensure_within(5, 5, 'homs')
        utils.ensure_within(10 ** 9, None, 'homs')
        with self.assertRaises(LimitExceeded):
            utils.ensure_within(6, 5, 'homs')

    def test_check_search_budget(self):
        utils.check_search_budget(5, 5, 'subgroup search')
        utils.check_search_budget(10 ** 9, None, 'subgroup search')
        with self.assertRaises(BudgetExceeded) as cm:
            utils.check_search_budget(6, 5, 'subgroup search')
        self.assertEqual(cm.exception.stage, 'subgroup search')
        self.assertEqual(cm.exception.exit_code, 3)
        self.assertIn('limit 5', cm.exception.desc)

    def test_setting(self):
        self.assertEqual(utils.setting(None, 'SEED'), 0)
        self.assertEqual(utils.setting({'SEED': 7}, 'SEED'), 7)
        self.assertEqual(utils.setting({}, 'MAX_HOMS'), 2 * 10 ** 6)
