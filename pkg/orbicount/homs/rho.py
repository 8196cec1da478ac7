"""
Homomorphisms ρ: H -> G out of a finite-index subgroup H of Γ.

ρ is given by the images of H's Schreier generators. The group N_Γ(H) x G
acts on Hom(H, G): a deck element j, represented by the transversal word u_j,
sends ρ to ρ(u_j^-1 · u_j) and g acts by pointwise conjugation. Only finite
shadows of the isotropy group T_ρ are computed: the orbit of ρ, C_G(ρ), the
deck elements that fix the G-class of ρ, the projection π_G(T_ρ) and the
order of the automorphism group of the bundle (H, ρ).
"""
import collections
import logging

import numpy as np

from orbicount import default_config
from orbicount.exceptions import InvariantViolation
from orbicount.gamma.presentation import FREE_ABELIAN, GammaSpec
from orbicount.gamma.subgroups import (conjugate_into_generators, deck_group,
                                       schreier_generators)
from orbicount.group.finite import centralizer, subgroup_generated
from orbicount.homs.homspace import (evaluate_words, image_codes, iter_images,
                                     orbit_partition)

logger = logging.getLogger(__name__)

RhoClass = collections.namedtuple('RhoClass', ['subgroup', 'rho', 'orbit_size', 'cg_rho_order',
                                               'n_rho_index', 'aut_order'])


def subgroup_as_gamma(subgroup):
    """H as an abstract domain group on its Schreier generators."""
    rank = len(schreier_generators(subgroup))
    if subgroup.gamma.kind == FREE_ABELIAN:
        return GammaSpec.free_abelian(rank)
    return GammaSpec.free(rank)


class RhoSpace(object):
    """Hom(H, G) with the (N_Γ(H) x G)-action tabulated."""

    def __init__(self, subgroup, G, max_homs=default_config.MAX_HOMS, budget=None):
        self.subgroup = subgroup
        self.G = G
        self.generators = schreier_generators(subgroup)
        self.domain = subgroup_as_gamma(subgroup)
        self.images = np.array(list(iter_images(self.domain, G, max_homs, budget)),
                               dtype=np.int64).reshape(-1, self.domain.rank)
        self._codes = image_codes(self.images, G.order)
        self.deck = deck_group(subgroup)
        self.deck_moves = {}
        self.conjugated = {}
        for j in self.deck.elements:
            u = subgroup.transversal(j)
            words = [conjugate_into_generators(subgroup, u, s) for s in self.generators]
            moved = evaluate_words(words, self.images, G)
            self.conjugated[j] = moved
            self.deck_moves[j] = self.index_array(moved)
        self._g_classes = orbit_partition(self.images, G)
        self._classes = orbit_partition(self.images, G, extra_moves=list(self.deck_moves.values()))
        logger.debug('Hom(H, %s) for %r: %d homs, deck order %d',
                     G.name, subgroup, len(self.images), self.deck.order)

    def __len__(self):
        return len(self.images)

    def index(self, rho):
        return int(self.index_array(np.asarray([rho]))[0])

    def index_array(self, images):
        codes = image_codes(images, self.G.order)
        found = np.searchsorted(self._codes, codes)
        if np.any(found >= len(self._codes)) or np.any(self._codes[np.minimum(found, len(self._codes) - 1)] != codes):
            raise InvariantViolation('conjugated ρ is not a homomorphism out of H')
        return found

    def deck_acts_trivially(self):
        identity = np.arange(len(self.images))
        return all(np.array_equal(move, identity) for move in self.deck_moves.values())

    def isotropy_pairs(self, rho):
        """Pairs (j, g) with g·(u_j·ρ)·g^-1 = ρ; the finite shadow of T_ρ."""
        row = self.index(rho)
        rho = np.asarray(rho, dtype=np.int64)
        elements = self.G.elements
        pairs = []
        for j in self.deck.elements:
            moved = self.conjugated[j][row]
            ok = np.ones(self.G.order, dtype=bool)
            for x, target in zip(moved, rho):
                ok &= self.G.mul_array(self.G.mul_array(elements, int(x)), self.G.inv) == target
            pairs.extend((j, int(g)) for g in np.flatnonzero(ok))
        return pairs

    def pi_g_of_t_rho(self, rho):
        """The image of T_ρ in G, as a sorted element list."""
        elements = {g for _, g in self.isotropy_pairs(rho)}
        elements.update(int(x) for x in rho)
        return subgroup_generated(self.G, sorted(elements))

    def fixing_deck_elements(self, row):
        """Deck elements j with u_j·ρ G-conjugate to ρ."""
        target = self._g_classes.find(row)
        return [j for j in self.deck.elements
                if self._g_classes.find(int(self.deck_moves[j][row])) == target]

    def classes(self):
        """One RhoClass per (N_Γ(H) x G)-orbit, represented by its least member."""
        labels, count = self._classes.labels()
        first = [None] * count
        sizes = [0] * count
        for i, label in enumerate(labels):
            if first[label] is None:
                first[label] = i
            sizes[label] += 1
        result = []
        for label in range(count):
            row = first[label]
            rho = tuple(int(x) for x in self.images[row])
            cg = len(centralizer(self.G, rho))
            n_rho = len(self.fixing_deck_elements(row))
            aut = len(self.isotropy_pairs(rho))
            if aut != cg * n_rho:
                raise InvariantViolation('|T_ρ / H_ρ| = %d but |C_G(ρ)|·|N^ρ/H| = %d·%d for %r'
                                         % (aut, cg, n_rho, rho))
            result.append(RhoClass(self.subgroup, rho, sizes[label], cg, n_rho, aut))
        return result

    def class_labels(self):
        """Dense (N_Γ(H) x G)-orbit id for every ρ, numbered by least member."""
        return self._classes.labels()[0]

    def g_class_labels(self):
        return self._g_classes.labels()[0]


def enumerate_rho_classes(subgroup, G, max_homs=default_config.MAX_HOMS, budget=None):
    return RhoSpace(subgroup, G, max_homs=max_homs, budget=budget).classes()


def pi_g_of_t_rho(subgroup, rho, G, space=None):
    space = space or RhoSpace(subgroup, G)
    return space.pi_g_of_t_rho(rho)


def isotropy_pairs(subgroup, rho, G, space=None):
    space = space or RhoSpace(subgroup, G)
    return space.isotropy_pairs(rho)
