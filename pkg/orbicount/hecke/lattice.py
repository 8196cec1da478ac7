"""
Hecke operators on sublattices of Z^2.

A LatticeSum is a formal sum of sublattices with nonnegative integer
multiplicities. T(n) replaces each lattice by the sum of its index-n
sublattices and R(d) scales each lattice by d.
"""
import collections
import math

from orbicount.checks import compare
from orbicount.exceptions import InvalidInput
from orbicount.gamma.lattice import ambient, enumerate_sublattices
from orbicount.utils import divisors, sigma1

DIMENSION = 2


class LatticeSum(collections.Counter):

    @classmethod
    def ambient(cls):
        return cls({ambient(DIMENSION): 1})

    def total(self):
        return sum(self.values())

    def to_json(self):
        return [{'hnf': [list(row) for row in lattice.basis], 'multiplicity': m}
                for lattice, m in sorted(self.items())]


def hecke_T(n, lattices):
    if n < 1:
        raise InvalidInput('Hecke index must be positive')
    inner = enumerate_sublattices(DIMENSION, n)
    result = LatticeSum()
    for lattice, multiplicity in lattices.items():
        for sub in inner:
            result[lattice.sublattice(sub)] += multiplicity
    return result


def scale_R(d, lattices):
    if d < 1:
        raise InvalidInput('scale must be positive')
    result = LatticeSum()
    for lattice, multiplicity in lattices.items():
        result[lattice.scaled(d)] += multiplicity
    return result


def hecke_identity_rhs(m, n, lattices=None):
    """Σ_{d | (m, n)} d·R(d)T(mn/d^2) applied to `lattices` (default Z^2)."""
    lattices = lattices if lattices is not None else LatticeSum.ambient()
    result = LatticeSum()
    for d in divisors(math.gcd(m, n)):
        for lattice, multiplicity in scale_R(d, hecke_T(m * n // (d * d), lattices)).items():
            result[lattice] += d * multiplicity
    return result


def verify_lattice_hecke(m, n):
    """T(m)T(n) = Σ_{d | (m, n)} d·R(d)T(mn/d^2) on Z^2, as multisets."""
    lhs = hecke_T(m, hecke_T(n, LatticeSum.ambient()))
    rhs = hecke_identity_rhs(m, n)
    check = compare('lattice-hecke', {'m': m, 'n': n}, lhs.total(), rhs.total())
    return check._replace(passed=lhs == rhs)


def verify_commutativity(m, n):
    ambient_sum = LatticeSum.ambient()
    left = hecke_T(m, hecke_T(n, ambient_sum))
    right = hecke_T(n, hecke_T(m, ambient_sum))
    return compare('hecke-commute', {'m': m, 'n': n}, left.total(), right.total())._replace(passed=left == right)


def verify_scaling_commutes(d, n):
    ambient_sum = LatticeSum.ambient()
    left = scale_R(d, hecke_T(n, ambient_sum))
    right = hecke_T(n, scale_R(d, ambient_sum))
    return compare('scale-commute', {'d': d, 'n': n}, left.total(), right.total())._replace(passed=left == right)


def verify_sublattice_counts(n_max=50):
    counts = [hecke_T(n, LatticeSum.ambient()).total() for n in range(1, n_max + 1)]
    return compare('sublattice-count', {'n_max': n_max}, counts, [sigma1(n) for n in range(1, n_max + 1)])


def verify_lattice_suite(max_mn=10, max_commute=8, max_count=50):
    checks = [verify_lattice_hecke(m, n) for m in range(1, max_mn + 1) for n in range(1, max_mn + 1)]
    checks += [verify_commutativity(m, n) for m in range(1, max_commute + 1) for n in range(m + 1, max_commute + 1)]
    checks.append(verify_sublattice_counts(max_count))
    return checks
