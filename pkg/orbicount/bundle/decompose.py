"""
Irreducible decomposition of Γ-G bundles over finite sets and the order of
their centralizers.

A homomorphism θ: Γ -> G wr S_n is a G-bundle over {0..n-1} with a commuting
Γ-action. The Γ-orbits on the points split it into irreducible pieces, each
described by the stabilizer H of a point and the homomorphism ρ: H -> G read
off at that point. Pieces with conjugate (H, ρ) are isomorphic and are
collected with a multiplicity r.
"""
import collections
import logging
import math

import numpy as np

from orbicount import default_config
from orbicount.checks import compare
from orbicount.exceptions import InvalidInput, InvariantViolation, UnsupportedOperation
from orbicount.gamma.presentation import FREE, FREE_ABELIAN, evaluate_word
from orbicount.gamma.subgroups import (SubgroupClass, from_sublattice, schreier_generators,
                                       stabilizer_sublattice, standardize)
from orbicount.group.finite import centralizer, invert
from orbicount.group.wreath import WreathGroup, wreath_product
from orbicount.homs.homspace import Hom, enumerate_homs, iter_hom_classes
from orbicount.homs.rho import RhoSpace
from orbicount.utils import UnionFind, check_budget, setting

logger = logging.getLogger(__name__)

BundleSummand = collections.namedtuple('BundleSummand', ['subgroup', 'rho', 'multiplicity'])

POLICIES = ('exhaustive', 'classes', 'samples')


class BundleDecomposition(object):

    def __init__(self, theta, summands):
        self.theta = theta
        self.summands = summands

    @property
    def degree(self):
        return sum(s.multiplicity * s.subgroup.degree for s in self.summands)

    def signature(self):
        """Summand multiset in a form that compares across decompositions."""
        return sorted((s.subgroup.key(), s.rho.rho, s.multiplicity) for s in self.summands)

    def to_json(self):
        return [{'index': s.subgroup.degree,
                 'coset_table': [list(row) for row in s.subgroup.table],
                 'rho': list(s.rho.rho),
                 'aut_order': s.rho.aut_order,
                 'multiplicity': s.multiplicity} for s in self.summands]


class Decomposer(object):
    """Decomposes homomorphisms into one wreath product, sharing Hom(H, G) tables."""

    def __init__(self, gamma, wreath, max_homs=default_config.MAX_HOMS, budget=None):
        if gamma.kind not in (FREE, FREE_ABELIAN):
            raise UnsupportedOperation('bundle decomposition needs a free or free abelian domain')
        if not isinstance(wreath, WreathGroup):
            raise InvalidInput('%s is not a wreath product' % wreath.name)
        self.gamma = gamma
        self.wreath = wreath
        self.max_homs = max_homs
        self.budget = budget
        self._spaces = {}

    def _space(self, table):
        if table not in self._spaces:
            if self.gamma.kind == FREE_ABELIAN:
                probe = SubgroupClass(self.gamma, table)
                subgroup = from_sublattice(self.gamma, stabilizer_sublattice(probe))
                if subgroup.table != table:
                    raise InvariantViolation('coset table and sublattice disagree for %r' % (table,))
            else:
                subgroup = SubgroupClass(self.gamma, table)
            space = RhoSpace(subgroup, self.wreath.base, max_homs=self.max_homs, budget=self.budget)
            self._spaces[table] = (subgroup, space, space.class_labels(), space.classes())
        return self._spaces[table]

    def decompose(self, theta):
        W = self.wreath
        n = W.n
        if len(theta.images) != self.gamma.rank:
            raise InvalidInput('θ must give one image per generator')
        # right action on points: x·a = σ_a^-1(x)
        actions = [invert(W.permutation(g)) for g in theta.images]
        uf = UnionFind(n)
        for action in actions:
            uf.union_many(range(n), action)
        orbits = collections.OrderedDict()
        for x in range(n):
            orbits.setdefault(uf.find(x), []).append(x)

        counts = collections.Counter()
        found = {}
        for points in orbits.values():
            local = {x: i for i, x in enumerate(points)}
            table = tuple(tuple(local[action[x]] for x in points) for action in actions)
            candidates = [(standardize(table, b)[0], b) for b in range(len(points))]
            canonical, basepoint = min(candidates)
            subgroup, space, labels, classes = self._space(canonical)
            point = points[basepoint]
            rho = tuple(W.decode(evaluate_word(word, theta.images, W)).base[point]
                        for word in schreier_generators(subgroup))
            label = labels[space.index(rho)]
            key = (canonical, label)
            counts[key] += 1
            found[key] = (subgroup, classes[label])

        summands = [BundleSummand(found[key][0], found[key][1], counts[key]) for key in sorted(counts)]
        decomposition = BundleDecomposition(theta, summands)
        if decomposition.degree != n:
            raise InvariantViolation('summands cover %d points, expected %d' % (decomposition.degree, n))
        return decomposition


def decompose_theta(theta, max_homs=default_config.MAX_HOMS):
    return Decomposer(theta.gamma, theta.target, max_homs=max_homs).decompose(theta)


def centralizer_order_formula(decomposition):
    """Π over summands of aut_order^r · r!."""
    order = 1
    for summand in decomposition.summands:
        order *= summand.rho.aut_order ** summand.multiplicity * math.factorial(summand.multiplicity)
    return order


def centralizer_order(theta):
    """|C(θ)| by scanning the whole wreath product."""
    return len(centralizer(theta.target, theta.images))


def select_homs(gamma, wreath, policy='exhaustive', samples=100, seed=default_config.SEED,
                max_homs=default_config.MAX_HOMS, budget=None):
    if policy not in POLICIES:
        raise InvalidInput('unknown sampling policy `%s`' % policy)
    if policy == 'classes':
        return [c.representative for c in iter_hom_classes(gamma, wreath, max_homs=max_homs, budget=budget)]
    homs = enumerate_homs(gamma, wreath, max_homs=max_homs, budget=budget)
    if policy == 'samples' and samples < len(homs):
        rng = np.random.default_rng(seed)
        picked = sorted(rng.choice(len(homs), size=samples, replace=False))
        homs = [homs[int(i)] for i in picked]
    return homs


def verify_centralizer(gamma, G, n, policy='exhaustive', samples=100, seed=None, config=None, budget=None):
    """Checks the degree count and the centralizer order formula on a set of θ.

    Every checked θ is also conjugated by a generator of the wreath product and
    decomposed again; both decompositions must agree.
    """
    seed = setting(config, 'SEED') if seed is None else seed
    W = wreath_product(G, n, max_order=setting(config, 'MAX_GROUP_ORDER'))
    W.materialize(setting(config, 'MATERIALIZE_ORDER'))
    max_homs = setting(config, 'MAX_HOMS')
    decomposer = Decomposer(gamma, W, max_homs=max_homs, budget=budget)
    homs = select_homs(gamma, W, policy, samples=samples, seed=seed, max_homs=max_homs, budget=budget)
    mover = W.generators[-1] if W.generators else W.identity

    matching = invariant = covered = 0
    failures = []
    for i, theta in enumerate(homs):
        if i % 256 == 0:
            check_budget(budget, 'centralizer check')
        decomposition = decomposer.decompose(theta)
        covered += decomposition.degree == n
        formula = centralizer_order_formula(decomposition)
        brute = centralizer_order(theta)
        if formula == brute:
            matching += 1
        elif len(failures) < 5:
            failures.append({'theta': [W.label(g) for g in theta.images], 'formula': formula, 'brute_force': brute})
        moved = Hom(gamma, W, tuple(W.conjugate(mover, g) for g in theta.images))
        if decomposer.decompose(moved).signature() == decomposition.signature():
            invariant += 1

    inputs = {'gamma': gamma.name(), 'group': G.name, 'n': n, 'policy': policy}
    if policy == 'samples':
        inputs.update(samples=samples, seed=seed)
    if failures:
        inputs['failures'] = failures
    checked = len(homs)
    logger.debug('Centralizer check %s: %d/%d', inputs, matching, checked)
    return [compare('centralizer-order', inputs, matching, checked),
            compare('degree-count', inputs, covered, checked),
            compare('conjugation-invariance', inputs, invariant, checked)]
