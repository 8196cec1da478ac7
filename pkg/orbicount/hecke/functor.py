"""
Geometric Hecke operators on the torus, evaluated on the counting functor.

For a covering torus with fundamental group L ⊂ Z^2 the functor value is
|C_L(M/G) / (Z^2/L)|: pairs (ρ, x) with ρ: L -> G and x fixed by the image
of ρ, up to G and deck transformations. On finite sets this is the number of
pair orbits, so each value is a χ of the coset set Z^2/L.
"""
import logging
import math

from orbicount import default_config
from orbicount.checks import compare
from orbicount.euler.chi import chi_gamma, chi_gamma_set, hecke_chi
from orbicount.exceptions import InvalidInput
from orbicount.gamma.presentation import GammaSpec
from orbicount.gamma.subgroups import from_sublattice
from orbicount.hecke.lattice import LatticeSum, hecke_T, scale_R
from orbicount.homs.rho import RhoSpace
from orbicount.utils import check_budget, divisors, setting, sigma1

logger = logging.getLogger(__name__)

TORUS = GammaSpec.free_abelian(2)


class CountingFunctor(object):
    """F(L) = |C_L(M/G) / (Z^2/L)| with values cached per sublattice."""

    def __init__(self, gset, G, max_homs=default_config.MAX_HOMS, budget=None):
        if gset.group is not G:
            raise InvalidInput('the G-set is defined over %s, not %s' % (gset.group.name, G.name))
        self.gset = gset
        self.G = G
        self.max_homs = max_homs
        self.budget = budget
        self._values = {}
        self._deck_trivial = {}

    @property
    def evaluations(self):
        return len(self._values)

    @property
    def deck_trivial(self):
        """Evaluated sublattices whose deck group fixed every homomorphism."""
        return sum(self._deck_trivial.values())

    def __call__(self, lattice):
        if lattice not in self._values:
            check_budget(self.budget, 'functor at %s' % lattice)
            subgroup = from_sublattice(TORUS, lattice)
            space = RhoSpace(subgroup, self.G, max_homs=self.max_homs, budget=self.budget)
            self._deck_trivial[lattice] = space.deck_acts_trivially()
            if not self._deck_trivial[lattice]:
                logger.warning('deck group of %s moves a homomorphism into %s', lattice, self.G.name)
            self._values[lattice] = chi_gamma_set(self.gset, self.G, subgroup, space=space)
        return self._values[lattice]

    def total(self, lattices):
        """Σ multiplicity · F(L) over a LatticeSum."""
        return sum(multiplicity * self(lattice) for lattice, multiplicity in sorted(lattices.items()))


def _functor(gset, G, config, budget):
    return CountingFunctor(gset, G, max_homs=setting(config, 'MAX_HOMS'), budget=budget)


def functor_hecke_eval(gset, G, n, functor=None):
    """|(T(n)F)(T)|: the sum of F over the index-n sublattices."""
    functor = functor or CountingFunctor(gset, G)
    return functor.total(hecke_T(n, LatticeSum.ambient()))


def nested_value(functor, m, n):
    """(T(m)(T(n)F))(T), summing F(K) over K of index n inside each H of index m."""
    total = 0
    for outer in hecke_T(m, LatticeSum.ambient()):
        total += functor.total(hecke_T(n, LatticeSum({outer: 1})))
    return total


def scaled_value(functor, d, n):
    """(T(n)(R(d)F))(T) = Σ over L of index n of F(d·L)."""
    return functor.total(scale_R(d, hecke_T(n, LatticeSum.ambient())))


def verify_functor_hecke(gset, G, m, n, config=None, budget=None):
    """T(m)T(n)F = Σ_{d | (m, n)} d·T(mn/d^2)R(d)F, evaluated on the torus."""
    functor = _functor(gset, G, config, budget)
    lhs = nested_value(functor, m, n)
    rhs = sum(d * scaled_value(functor, d, m * n // (d * d)) for d in divisors(math.gcd(m, n)))
    inputs = {'group': G.name, 'gset': gset.name, 'm': m, 'n': n}
    checks = [compare('functor-hecke', inputs, lhs, rhs),
              compare('deck-triviality', inputs, functor.deck_trivial, functor.evaluations)]
    logger.debug('Functor Hecke check %s: %d vs %d', inputs, lhs, rhs)
    return checks


def verify_functor_eval(gset, G, n, config=None, budget=None):
    """T(n)F against the Hecke sum of χ and against σ1(n)·χ_{Z^2}."""
    functor = _functor(gset, G, config, budget)
    value = functor_hecke_eval(gset, G, n, functor=functor)
    max_homs = setting(config, 'MAX_HOMS')
    inputs = {'group': G.name, 'gset': gset.name, 'n': n}
    torus_chi = chi_gamma(gset, G, TORUS, max_homs=max_homs, budget=budget)
    return [compare('functor-euler-hecke', inputs, value,
                    hecke_chi(gset, G, TORUS, n, max_homs=max_homs, budget=budget)),
            compare('functor-divisor-sum', inputs, value, sigma1(n) * torus_chi)]


def verify_functor_multiplicativity(gset, G, max_coprime=4, primes=(2, 3), max_power=2,
                                    config=None, budget=None):
    """Coprime products and the prime-power recursion for the functor Hecke operators."""
    functor = _functor(gset, G, config, budget)
    base = {'group': G.name, 'gset': gset.name}
    checks = []
    for m in range(2, max_coprime + 1):
        for n in range(m + 1, max_coprime + 1):
            if math.gcd(m, n) != 1:
                continue
            checks.append(compare('functor-coprime', dict(base, m=m, n=n), nested_value(functor, m, n),
                                  functor_hecke_eval(gset, G, m * n, functor=functor)))
    for p in primes:
        for r in range(1, max_power + 1):
            lhs = nested_value(functor, p, p ** r)
            rhs = functor_hecke_eval(gset, G, p ** (r + 1), functor=functor) + \
                p * scaled_value(functor, p, p ** (r - 1))
            checks.append(compare('functor-prime-power', dict(base, p=p, r=r), lhs, rhs))
    return checks


