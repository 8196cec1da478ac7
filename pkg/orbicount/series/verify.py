"""
Checks for the product/exponential pair and the one-variable specialisations.
"""
import logging

from orbicount.checks import compare
from orbicount.series.pqy import CoeffTable, dmvv_exp, dmvv_product
from orbicount.series.pseries import product_of_powers
from orbicount.utils import partition_numbers

logger = logging.getLogger(__name__)

RANDOM_TABLES = 20
RANDOM_WINDOW = (4, 3, 2)


def verify_dmvv(c, P, Q, Y, name='table'):
    """The product form and the exponential form agree through (P, Q, Y)."""
    product = dmvv_product(c, P, Q, Y)
    exponential = dmvv_exp(c, P, Q, Y)
    inputs = {'coeffs': name, 'p': P, 'q': Q, 'y': Y}
    checks = [compare('dmvv-equivalence', inputs, product.to_json(), exponential.to_json()),
              compare('dmvv-integrality', inputs, True, exponential.is_integral())]
    logger.debug('DMVV check for %s: %s', name, checks[0].passed)
    return checks


def verify_dmvv_random(count=RANDOM_TABLES, seed=0, window=RANDOM_WINDOW, c_range=(-3, 3)):
    P, Q, Y = window
    checks = []
    for i in range(count):
        c = CoeffTable.random(seed + i, P * Q, Y, c_range=c_range)
        checks.extend(verify_dmvv(c, P, Q, Y, name='random(seed=%d)' % (seed + i)))
    return checks


def verify_partitions(truncation=10):
    """c(0,0) = 1 gives the partition generating function on both sides."""
    oracle = partition_numbers(truncation)
    c = CoeffTable(0, 0, {(0, 0): 1})
    inputs = {'coeffs': 'partition', 'p': truncation}
    product = dmvv_product(c, truncation, 0, 0).p_series()
    exponential = dmvv_exp(c, truncation, 0, 0).p_series()
    return [compare('partition-product', inputs, product.coefficients_as_ints(), oracle),
            compare('partition-exponential', inputs, exponential.coefficients_as_ints(), oracle)]


def verify_euler_specialization(euler, truncation=6):
    """A table supported at (0, 0) with value e reproduces Π (1 - p^n)^(-e)."""
    c = CoeffTable(0, 0, {(0, 0): euler})
    expected = product_of_powers(truncation, [(n, euler) for n in range(1, truncation + 1)])
    actual = dmvv_product(c, truncation, 0, 0).p_series()
    return [compare('euler-specialization', {'e': euler, 'p': truncation},
                    actual.to_json(), expected.to_json())]
