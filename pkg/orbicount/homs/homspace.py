"""
Homomorphisms from a domain group Γ into a finite group G.

A homomorphism is stored by the images of Γ's generators. Enumerations are
returned in lexicographic order of the image tuples, so the least member of a
conjugation class is also the first one met.
"""
import collections
import itertools
import logging

import numpy as np

from orbicount import default_config
from orbicount.exceptions import InvariantViolation
from orbicount.gamma.presentation import FREE, FREE_ABELIAN, evaluate_word, is_hom
from orbicount.group.finite import (centralizer, centralizer_mask, closure,
                                    conjugacy_classes)
from orbicount.utils import UnionFind, check_budget, check_search_budget

logger = logging.getLogger(__name__)

Hom = collections.namedtuple('Hom', ['gamma', 'target', 'images'])

HomClass = collections.namedtuple('HomClass', ['representative', 'centralizer', 'size'])


def _check_count(gamma, G, max_homs):
    if gamma.kind != FREE_ABELIAN or gamma.rank == 1:
        check_search_budget(G.order ** gamma.rank, max_homs,
                            'hom enumeration of Hom(%s, %s)' % (gamma.name(), G.name))


def iter_images(gamma, G, max_homs=default_config.MAX_HOMS, budget=None):
    """Image tuples of every homomorphism Γ -> G, in lexicographic order."""
    _check_count(gamma, G, max_homs)
    if gamma.kind == FREE_ABELIAN:
        for images in _commuting_tuples(G, gamma.rank, max_homs, budget):
            yield images
        return
    count = 0
    for images in itertools.product(range(G.order), repeat=gamma.rank):
        count += 1
        if count % 65536 == 0:
            check_budget(budget, 'hom enumeration')
        if gamma.kind == FREE or is_hom(images, gamma, G):
            yield images


def _commuting_tuples(G, rank, max_homs, budget):
    found = [0]

    def extend(prefix, mask):
        if len(prefix) == rank:
            found[0] += 1
            check_search_budget(found[0], max_homs,
                                'hom enumeration of Hom(free-abelian(%d), %s)' % (rank, G.name))
            yield tuple(prefix)
            return
        check_budget(budget, 'hom enumeration')
        for g in np.flatnonzero(mask):
            g = int(g)
            if len(prefix) == rank - 1:
                inner = mask
            else:
                inner = mask & centralizer_mask(G, [g])
            for images in extend(prefix + [g], inner):
                yield images

    return extend([], np.ones(G.order, dtype=bool))


def enumerate_homs(gamma, G, max_homs=default_config.MAX_HOMS, budget=None):
    homs = [Hom(gamma, G, images) for images in iter_images(gamma, G, max_homs, budget)]
    logger.debug('|Hom(%s, %s)| = %d', gamma.name(), G.name, len(homs))
    return homs


def image_codes(images, order):
    """Lexicographic rank of image tuples, most significant generator first."""
    images = np.asarray(images, dtype=np.int64)
    rank = images.shape[-1]
    weights = order ** np.arange(rank - 1, -1, -1, dtype=np.int64)
    return images @ weights


def conjugate_images(G, g, images):
    """Pointwise conjugation of an (homs x rank) image array by g."""
    return G.conjugate_array(g, np.asarray(images, dtype=np.int64))


def orbit_partition(images, G, extra_moves=()):
    """Union-find over the rows of `images` under G-conjugation.

    `images` must be sorted lexicographically and closed under conjugation.
    `extra_moves` are further index arrays (row -> row) merged in as well.
    """
    images = np.asarray(images, dtype=np.int64)
    codes = image_codes(images, G.order)
    uf = UnionFind(len(images))
    for s in G.generators:
        moved = np.searchsorted(codes, image_codes(conjugate_images(G, s, images), G.order))
        uf.union_many(range(len(images)), moved)
    for move in extra_moves:
        uf.union_many(range(len(images)), move)
    return uf


def hom_classes(homs, G):
    """Splits a conjugation-closed list of homomorphisms into G-classes.

    Returns HomClass records ordered by their lexicographically least member,
    which is the representative.
    """
    if not homs:
        return []
    homs = sorted(homs, key=lambda h: h.images)
    images = np.array([h.images for h in homs], dtype=np.int64)
    uf = orbit_partition(images, G)
    labels, count = uf.labels()
    first = [None] * count
    sizes = [0] * count
    for i, label in enumerate(labels):
        if first[label] is None:
            first[label] = i
        sizes[label] += 1
    result = []
    for label in range(count):
        rep = homs[first[label]]
        c = centralizer(G, rep.images)
        if sizes[label] * len(c) != G.order:
            raise InvariantViolation('class of %r has %d members but |C| = %d in |G| = %d'
                                     % (rep.images, sizes[label], len(c), G.order))
        result.append(HomClass(rep, c, sizes[label]))
    return result


def _subgroup_generators(G, members):
    members = [int(x) for x in members]
    generators = []
    reached = closure(G, generators)
    for x in members:
        if not reached[x]:
            generators.append(x)
            reached = closure(G, generators)
    return generators


def _classes_within(G, members):
    """Conjugacy classes of the subgroup `members` (sorted), least element first."""
    generators = _subgroup_generators(G, members)
    uf = UnionFind(G.order)
    members = np.asarray(members, dtype=np.int64)
    for s in generators:
        uf.union_many(members, G.conjugate_array(s, members))
    seen = set()
    for x in members:
        root = uf.find(int(x))
        if root not in seen:
            seen.add(root)
            yield int(x)


def iter_hom_classes(gamma, G, max_homs=default_config.MAX_HOMS, budget=None, centralizers=True):
    """Hom(Γ, G)/G, one HomClass per conjugation class.

    Γ = Z walks conjugacy classes, Γ = Z^2 walks g and then the classes of
    C(g), anything else partitions the raw enumeration. With
    `centralizers=False` the Γ = Z classes come without their centralizer.
    """
    if gamma.is_cyclic_free:
        classes = conjugacy_classes(G)
        for i, g in enumerate(classes.representatives):
            check_budget(budget, 'hom classes')
            c = centralizer(G, [g]) if centralizers else None
            yield HomClass(Hom(gamma, G, (g,)), c, classes.class_sizes[i])
        return
    if gamma.kind == FREE_ABELIAN and gamma.rank == 2:
        classes = conjugacy_classes(G)
        for g in classes.representatives:
            check_budget(budget, 'hom classes')
            c_g = centralizer(G, [g])
            for h in _classes_within(G, c_g):
                c = centralizer(G, [g, h])
                yield HomClass(Hom(gamma, G, (g, h)), c, G.order // len(c))
        return
    for hom_class in hom_classes(enumerate_homs(gamma, G, max_homs, budget), G):
        yield hom_class


def evaluate_words(words, images, G):
    """Evaluates each word on every row of an (homs x rank) image array."""
    images = np.asarray(images, dtype=np.int64)
    columns = []
    for word in words:
        value = np.full(len(images), G.identity, dtype=np.int64)
        for letter in word:
            column = images[:, abs(letter) - 1]
            if letter < 0:
                column = G.inv[column]
            value = G.mul_array(value, column)
        columns.append(value)
    return np.stack(columns, axis=1) if columns else np.zeros((len(images), 0), dtype=np.int64)


def hom_value(hom, word):
    return evaluate_word(word, hom.images, hom.target)
