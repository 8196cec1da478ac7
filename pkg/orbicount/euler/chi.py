"""
Orbifold Euler characteristics of finite G-sets.

For a finite set every Euler characteristic is an orbit count, so each
quantity here is a number of orbits on a set of pairs (θ, x) with x fixed by
the image of θ.
"""
import logging
from fractions import Fraction

import numpy as np

from orbicount import default_config
from orbicount.euler.gset import orbit_count_closed
from orbicount.exceptions import InvalidInput, InvariantViolation
from orbicount.gamma.subgroups import enumerate_subgroup_classes
from orbicount.homs.homspace import conjugate_images, iter_hom_classes, iter_images
from orbicount.homs.rho import RhoSpace
from orbicount.utils import UnionFind, check_budget

logger = logging.getLogger(__name__)

# (θ, g) pairs tested per array step of the Burnside sum
BURNSIDE_BLOCK = 1 << 20


def _same_group(gset, G):
    if gset.group is not G:
        raise InvalidInput('the G-set is defined over %s, not %s' % (gset.group.name, G.name))


def chi_gamma(gset, G, gamma, max_homs=default_config.MAX_HOMS, budget=None):
    """Sum over classes (θ) in Hom(Γ, G)/G of the C_G(θ)-orbits on M^<θ>."""
    _same_group(gset, G)
    # a one-point set has one orbit under any centralizer
    single = gset.size == 1
    total = 0
    for hom_class in iter_hom_classes(gamma, G, max_homs=max_homs, budget=budget, centralizers=not single):
        points = np.flatnonzero(gset.fixmask(hom_class.representative.images))
        if single:
            total += points.size
        else:
            total += orbit_count_closed(gset, hom_class.centralizer, points)
    logger.debug('chi_%s(%s; %s) = %d', gamma.name(), gset.name, G.name, total)
    return total


def _burnside_block(gset, G, images, fixed_by):
    """Σ over the rows θ of `images` of #{(g, x) : gθ = θg, gx = x, x ∈ M^<θ>}."""
    elements = G.elements
    commutes = np.ones((len(images), G.order), dtype=bool)
    for column in images.T:
        left = G.mul_array(elements[None, :], column[:, None])
        commutes &= left == G.mul_array(column[:, None], elements[None, :])
    pairs = commutes.astype(np.int64) @ fixed_by
    return int((pairs * _fixed_rows(gset, images)).sum())


def chi_gamma_burnside(gset, G, gamma, max_homs=default_config.MAX_HOMS, budget=None):
    """(1/|G|) Σ_g #{(θ, x) : gθg^-1 = θ, gx = x, x ∈ M^<θ>}.

    Runs over every θ in Hom(Γ, G) and every g in G, without the class
    enumeration; each block of θ is tested against all of G at once.
    """
    _same_group(gset, G)
    fixed_by = (gset.action == np.arange(gset.size)[None, :]).astype(np.int64)
    step = max(1, BURNSIDE_BLOCK // G.order)
    total = 0
    block = []
    for images in iter_images(gamma, G, max_homs=max_homs, budget=budget):
        block.append(images)
        if len(block) == step:
            check_budget(budget, 'Burnside sum')
            total += _burnside_block(gset, G, np.array(block, dtype=np.int64), fixed_by)
            block = []
    if block:
        total += _burnside_block(gset, G, np.array(block, dtype=np.int64), fixed_by)
    value, remainder = divmod(total, G.order)
    if remainder:
        raise InvariantViolation('Burnside sum %s is not an integer' % Fraction(total, G.order))
    return value


def _fixed_rows(gset, images):
    """fixed[r, x]: x is fixed by every image in row r."""
    points = np.arange(gset.size)
    fixed = np.ones((len(images), gset.size), dtype=bool)
    for column in range(images.shape[1]):
        fixed &= gset.action[images[:, column]] == points[None, :]
    return fixed


def chi_by_rho_classes(gset, space):
    """Σ over [ρ] of the π_G(T_ρ)-orbits on M^<ρ>."""
    total = 0
    for rho_class in space.classes():
        points = np.flatnonzero(gset.fixmask(rho_class.rho))
        total += orbit_count_closed(gset, space.pi_g_of_t_rho(rho_class.rho), points)
    return total


def chi_by_pair_orbits(gset, space):
    """Orbits of the deck group times G on pairs (ρ, x) with x in M^<ρ>."""
    G = space.G
    size = gset.size
    fixed = _fixed_rows(gset, space.images)
    rows, points = np.nonzero(fixed)
    uf = UnionFind(len(space.images) * size)
    ids = rows * size + points
    for move in space.deck_moves.values():
        uf.union_many(ids, move[rows] * size + points)
    for s in G.generators:
        conjugated = space.index_array(conjugate_images(G, s, space.images))
        uf.union_many(ids, conjugated[rows] * size + gset.action[s][points])
    return len({uf.find(int(i)) for i in ids})


def chi_gamma_set_both(gset, G, subgroup, max_homs=default_config.MAX_HOMS, budget=None, space=None):
    """Both presentations of χ_[Γ/H](M; G), as a pair."""
    _same_group(gset, G)
    space = space or RhoSpace(subgroup, G, max_homs=max_homs, budget=budget)
    return chi_by_rho_classes(gset, space), chi_by_pair_orbits(gset, space)


def chi_gamma_set(gset, G, subgroup, max_homs=default_config.MAX_HOMS, budget=None, space=None):
    by_classes, by_pairs = chi_gamma_set_both(gset, G, subgroup, max_homs=max_homs,
                                              budget=budget, space=space)
    if by_classes != by_pairs:
        raise InvariantViolation('χ for %r: %d from ρ-classes but %d from pair orbits'
                                 % (subgroup, by_classes, by_pairs))
    return by_classes


def hecke_chi(gset, G, gamma, n, max_homs=default_config.MAX_HOMS,
              max_nodes=default_config.MAX_SEARCH_NODES, budget=None):
    """Σ over conjugacy classes [H] of index n of χ_[Γ/H](M; G)."""
    total = 0
    for subgroup in enumerate_subgroup_classes(gamma, n, budget=budget, max_nodes=max_nodes):
        check_budget(budget, 'Hecke sum')
        total += chi_gamma_set(gset, G, subgroup, max_homs=max_homs, budget=budget)
    return total
