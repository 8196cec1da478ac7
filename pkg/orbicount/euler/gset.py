"""
Finite G-sets with a full action table.

`action[g][x]` is g·x. Rows are indexed by group elements, so a G-set for a
wreath product G_n has |G_n| rows.
"""
import logging

import numpy as np

from orbicount import default_config
from orbicount.exceptions import InvalidInput, ParserError
from orbicount.group.finite import CyclicGroup, PermutationGroup
from orbicount.group.wreath import wreath_product
from orbicount.parser import Parser
from orbicount.utils import UnionFind, ensure_within

logger = logging.getLogger(__name__)

GSET_KINDS = ('point', 'trivial', 'regular', 'natural', 'table')


class FinGSet(object):

    def __init__(self, group, action, name=None, validate=True):
        self.group = group
        self.action = np.asarray(action, dtype=np.int64)
        if self.action.ndim != 2 or self.action.shape[0] != group.order:
            raise InvalidInput('action table must have one row per element of %s' % group.name)
        self.size = self.action.shape[1]
        self.name = name or '%d-point %s-set' % (self.size, group.name)
        if validate:
            self.validate()

    def __repr__(self):
        return '<FinGSet %s>' % self.name

    def validate(self):
        points = np.arange(self.size)
        if self.size and (self.action.min() < 0 or self.action.max() >= self.size):
            raise InvalidInput('%s: action entries must lie in 0..%d' % (self.name, self.size - 1))
        if not np.array_equal(self.action[self.group.identity], points):
            raise InvalidInput('%s: the identity does not act trivially' % self.name)
        # A left action on generators and all elements forces it on every pair.
        for s in self.group.generators:
            if not np.array_equal(self.action[self.group.left_row(s)], self.action[s][self.action]):
                raise InvalidInput('%s: action is not compatible with multiplication' % self.name)
        return self

    def fixmask(self, elements):
        mask = np.ones(self.size, dtype=bool)
        points = np.arange(self.size)
        for g in elements:
            mask &= self.action[int(g)] == points
        return mask

    def to_json(self):
        return {'size': self.size, 'action': self.action.tolist()}


def point_gset(group):
    return FinGSet(group, np.zeros((group.order, 1), dtype=np.int64), name='point')


def trivial_gset(group, size):
    return FinGSet(group, np.tile(np.arange(size, dtype=np.int64), (group.order, 1)),
                   name='%d fixed points' % size)


def regular_gset(group):
    elements = group.elements
    return FinGSet(group, group.mul_array(elements[:, None], elements[None, :]), name='regular')


def natural_gset(group):
    """A permutation group acting on 0..degree-1."""
    if not isinstance(group, PermutationGroup):
        raise InvalidInput('%s is not a permutation group' % group.name)
    return FinGSet(group, group.perms, name='natural')


def disjoint_union(first, second):
    if first.group is not second.group:
        raise InvalidInput('G-sets over different groups')
    action = np.concatenate([first.action, second.action + first.size], axis=1)
    return FinGSet(first.group, action, name='%s + %s' % (first.name, second.name), validate=False)


def power_gset(gset, n, max_order=default_config.MAX_GROUP_ORDER,
               max_table=default_config.MAX_GSET_TABLE, wreath=None):
    """M^n as a set acted on by G wr S_n; points are encoded as sum x_i |M|^i.

    n = 0 gives one point for the trivial group.
    """
    if n == 0:
        return point_gset(CyclicGroup(1))
    W = wreath or wreath_product(gset.group, n, max_order=max_order)
    m = gset.size
    size = m ** n
    ensure_within(W.order * size, max_table, 'action table of %s on M^%d' % (W.name, n))
    points = np.arange(size, dtype=np.int64)
    radix = m ** np.arange(n, dtype=np.int64)
    digits = (points[:, None] // radix[None, :]) % m if m else np.zeros((0, n), dtype=np.int64)
    action = np.empty((W.order, size), dtype=np.int64)
    step = max(1, (1 << 22) // max(1, size * n))
    for start in range(0, W.order, step):
        xs = np.arange(start, min(W.order, start + step), dtype=np.int64)
        base, perm = W.decode_array(xs)
        sigma_inverse = W.perms[W._perm_inverse[perm]]
        moved = np.transpose(digits[:, sigma_inverse], (1, 0, 2))
        images = gset.action[base[:, None, :], moved]
        action[start:start + len(xs)] = images @ radix
    logger.debug('Built %s action on %d points', W.name, size)
    return FinGSet(W, action, name='%s^%d' % (gset.name, n), validate=False)


def fixed_set(gset, elements):
    """Points fixed by every listed element (all points for an empty list)."""
    return [int(x) for x in np.flatnonzero(gset.fixmask(elements))]


def orbit_count(gset, elements, points=None):
    """Orbits of the subgroup generated by `elements` on `points` (default all).

    `points` must be invariant under the generated subgroup.
    """
    uf = UnionFind(gset.size)
    for g in elements:
        uf.union_many(range(gset.size), gset.action[int(g)])
    if points is None:
        points = range(gset.size)
    return len({uf.find(int(x)) for x in points})


def orbit_count_closed(gset, members, points):
    """Orbits of a subgroup given by ALL its members on an invariant point set.

    The least point of each orbit is found as a column minimum.
    """
    points = np.asarray(points, dtype=np.int64)
    if points.size == 0:
        return 0
    members = np.asarray(members, dtype=np.int64)
    least = points.copy()
    step = max(1, (1 << 22) // points.size)
    for start in range(0, len(members), step):
        block = gset.action[members[start:start + step]][:, points]
        least = np.minimum(least, block.min(axis=0))
    return len(np.unique(least))


def load_gset_spec(spec, group, path=''):
    """Builds a FinGSet for `group` from its JSON description.

    Either {"kind": "point" | "regular" | "natural" | "trivial", ...} or an
    explicit table {"size": m, "action": [[...], ...]} with one row per element.
    """
    if isinstance(spec, dict) and 'action' in spec and 'kind' not in spec:
        kind = 'table'
    else:
        kind = Parser.string(spec, 'kind', path, valid_values=GSET_KINDS)
    if kind == 'point':
        return point_gset(group)
    if kind == 'regular':
        return regular_gset(group)
    if kind == 'natural':
        return natural_gset(group)
    if kind == 'trivial':
        return trivial_gset(group, Parser.int(spec, 'size', path, min=0))
    size = Parser.int(spec, 'size', path, min=0)
    location = Parser.location(path, 'action')
    rows = Parser.list(spec, 'action', path, min=group.order, max=group.order)
    action = []
    for i, row in enumerate(rows):
        values = Parser.int_list(row, '%s[%d]' % (location, i), min=0, max=size - 1)
        if len(values) != size:
            raise ParserError('%s[%d]' % (location, i), 'must have %d entries' % size)
        action.append(values)
    return FinGSet(group, np.array(action, dtype=np.int64).reshape(group.order, size))
