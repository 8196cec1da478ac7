import unittest
from fractions import Fraction

from orbicount import fixtures
from orbicount.exceptions import InvalidInput, ParserError
from orbicount.series import pqy
from orbicount.utils import partition_numbers


class CoeffTableTestCase(unittest.TestCase):

    def test_window(self):
        c = pqy.CoeffTable(2, 1, {(0, 0): 1, (2, -1): 0})
        self.assertEqual(c.entries, {(0, 0): 1})
        self.assertEqual(c.get(2, 1), 0)
        with self.assertRaises(InvalidInput):
            c.get(3, 0)
        with self.assertRaises(InvalidInput):
            c.require(3)
        with self.assertRaises(InvalidInput):
            pqy.CoeffTable(1, 0, {(0, 1): 2})

    def test_random_is_seeded(self):
        first = pqy.CoeffTable.random(7, 4, 1)
        self.assertEqual(first.entries, pqy.CoeffTable.random(7, 4, 1).entries)
        self.assertTrue(all(-3 <= v <= 3 for v in first.entries.values()))

    def test_load(self):
        c = pqy.load_coeff_table(fixtures.get('coeffs', 'partition'))
        self.assertEqual((c.m_max, c.k_abs, c.entries), (0, 0, {(0, 0): 1}))
        summed = pqy.load_coeff_table({'window': {'m_max': 1, 'k_abs': 0},
                                       'entries': [[1, 0, 2], [1, 0, 3]]})
        self.assertEqual(summed.entries, {(1, 0): 5})
        self.assertEqual(summed.to_json(), {'window': {'m_max': 1, 'k_abs': 0}, 'entries': [[1, 0, 5]]})

    def test_load_errors(self):
        with self.assertRaises(ParserError) as cm:
            pqy.load_coeff_table({'window': {'m_max': 1, 'k_abs': 0}, 'entries': [[1, 0]]})
        self.assertEqual(cm.exception.key, 'entries[0]')
        with self.assertRaises(ParserError):
            pqy.load_coeff_table({'window': {'m_max': 1, 'k_abs': 0}, 'entries': [[2, 0, 1]]})
        with self.assertRaises(ParserError):
            pqy.load_coeff_table({'window': {'m_max': -1, 'k_abs': 0}, 'entries': []})


class PQYSeriesTestCase(unittest.TestCase):

    def test_geom_factor_inverse(self):
        series = pqy.PQYSeries.one(3, 2, 2)
        series.geom_factor(1, 1, 1, 2)
        self.assertEqual(series.coefficient(2, 2, 2), 3)
        series.geom_factor(1, 1, 1, -2)
        self.assertEqual(series, pqy.PQYSeries.one(3, 2, 2))

    def test_window(self):
        series = pqy.PQYSeries.one(1, 0, 2)
        self.assertEqual(series.window(0), pqy.PQYSeries.one(1, 0, 0))
        with self.assertRaises(InvalidInput):
            series.window(3)
        with self.assertRaises(InvalidInput):
            series.coefficient(0, 0, 3)

    def test_multiplication(self):
        a = pqy.PQYSeries.one(2, 1, 1).geom_factor(1, 0, 1, 1)
        b = pqy.PQYSeries.one(2, 1, 1).geom_factor(1, 0, 1, -1)
        self.assertEqual(a * b, pqy.PQYSeries.one(2, 1, 1))


class DMVVTestCase(unittest.TestCase):

    def test_jacobi_hecke(self):
        c = pqy.CoeffTable(0, 0, {(0, 0): 1})
        result = pqy.jacobi_hecke(c, 2, 0, 0)
        self.assertEqual(result.coefficient(0, 0, 0), Fraction(3, 2))
        with self.assertRaises(InvalidInput):
            pqy.jacobi_hecke(c, 0, 0, 0)

    def test_partitions(self):
        c = pqy.CoeffTable(0, 0, {(0, 0): 1})
        expected = partition_numbers(6)
        self.assertEqual(pqy.dmvv_product(c, 6, 0, 0).p_series().coefficients_as_ints(), expected)
        self.assertEqual(pqy.dmvv_exp(c, 6, 0, 0).p_series().coefficients_as_ints(), expected)

    def test_y_terms(self):
        c = pqy.CoeffTable(0, 1, {(0, 1): 1})
        product = pqy.dmvv_product(c, 2, 0, 2)
        self.assertEqual(product.coefficient(1, 0, 1), 1)
        self.assertEqual(product.coefficient(2, 0, 1), 1)
        self.assertEqual(product.coefficient(2, 0, 2), 1)
        self.assertEqual(product.to_json(), [[0, 0, 0, 1], [1, 0, 1, 1], [2, 0, 1, 1], [2, 0, 2, 1]])
        self.assertEqual(pqy.dmvv_exp(c, 2, 0, 2), product)

    def test_random_tables_agree(self):
        for seed in range(3):
            c = pqy.CoeffTable.random(seed, 6, 1)
            self.assertEqual(pqy.dmvv_product(c, 3, 2, 1), pqy.dmvv_exp(c, 3, 2, 1))

    def test_window_too_small(self):
        c = pqy.CoeffTable(2, 0, {(0, 0): 1})
        with self.assertRaises(InvalidInput):
            pqy.dmvv_product(c, 3, 1, 0)
