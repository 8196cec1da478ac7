"""
Finite groups as dense element indices 0..order-1.

Every group exposes the same small interface: `mul`, the vectorised
`mul_array`, the inverse table `inv`, `identity` and `generators`. Groups up
to `MATERIALIZE_ORDER` elements cache their full multiplication table and
answer every product by lookup; larger groups compute products
arithmetically (cyclic, permutation, product and wreath groups all have a
cheap closed form).
"""
import itertools
import logging

import numpy as np

from orbicount import default_config
from orbicount.exceptions import InvalidInput, LimitExceeded, UnsupportedOperation

logger = logging.getLogger(__name__)

# products of large groups are computed this many at a time
PRODUCT_CHUNK = 1 << 18


class FiniteGroup(object):

    def __init__(self, order, identity=0, generators=(), name=None):
        self.order = int(order)
        self.identity = int(identity)
        self.generators = tuple(int(g) for g in generators)
        self.name = name or 'group of order %d' % self.order
        self._table = None
        self._inv = None

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self.name)

    @property
    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def materialize(self, limit=default_config.MATERIALIZE_ORDER):
        """Caches the full multiplication table if the group is small enough."""
        if self._table is None and self.order <= limit:
            elements = self.elements
            table = np.empty((self.order, self.order), dtype=np.int64)
            step = max(1, (1 << 16) // self.order)
            for start in range(0, self.order, step):
                rows = elements[start:start + step]
                a, b = np.meshgrid(rows, elements, indexing='ij')
                table[start:start + step] = self._mul_array(a, b)
            self._table = table
        return self

    @property
    def table(self):
        if self._table is None:
            raise UnsupportedOperation('%s has no materialized multiplication table' % self.name)
        return self._table

    @property
    def has_table(self):
        return self._table is not None

    def mul_array(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self._table is not None:
            return self._table[a, b]
        if a.size <= PRODUCT_CHUNK:
            return self._mul_array(a, b)
        shape = a.shape
        a, b = a.ravel(), b.ravel()
        out = np.empty(a.size, dtype=np.int64)
        for start in range(0, a.size, PRODUCT_CHUNK):
            stop = start + PRODUCT_CHUNK
            out[start:stop] = self._mul_array(a[start:stop], b[start:stop])
        return out.reshape(shape)

    def _mul_array(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        if self._table is not None:
            return int(self._table[a, b])
        return int(self.mul_array(a, b))

    def product(self, elements):
        result = self.identity
        for g in elements:
            result = self.mul(result, g)
        return result

    @property
    def inv(self):
        if self._inv is None:
            if self._table is not None:
                self._inv = np.argmax(self._table == self.identity, axis=1).astype(np.int64)
            else:
                elements = self.elements
                self._inv = np.concatenate([self._inverse_array(elements[start:start + PRODUCT_CHUNK])
                                            for start in range(0, self.order, PRODUCT_CHUNK)])
        return self._inv

    def _inverse_array(self, a):
        raise NotImplementedError

    def inverse(self, a):
        return int(self.inv[a])

    def left_row(self, a):
        """a·x for every element x."""
        return self.mul_array(a, self.elements)

    def right_column(self, b):
        """x·b for every element x."""
        return self.mul_array(self.elements, b)

    def conjugate_array(self, g, xs):
        """g·x·g^-1 for every x in `xs`."""
        return self.mul_array(self.mul_array(g, xs), self.inv[g])

    def conjugate(self, g, x):
        return self.mul(self.mul(g, x), self.inverse(g))

    def label(self, a):
        return str(int(a))


class TableGroup(FiniteGroup):
    """A group given by an explicit Cayley table."""

    def __init__(self, table, generators=None, labels=None, name=None,
                 max_order=default_config.MAX_TABLE_ORDER):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidInput('Cayley table must be a non-empty square matrix')
        order = table.shape[0]
        if order > max_order:
            raise LimitExceeded('Cayley table of order %d exceeds %d' % (order, max_order))
        if table.min() < 0 or table.max() >= order:
            raise InvalidInput('Cayley table entries must lie in 0..%d' % (order - 1))
        elements = np.arange(order)
        units = [e for e in range(order)
                 if np.array_equal(table[e], elements) and np.array_equal(table[:, e], elements)]
        if not units:
            raise InvalidInput('Cayley table has no two-sided identity')
        super(TableGroup, self).__init__(order, identity=units[0], name=name)
        self._table = table
        self.labels = list(labels) if labels is not None else None
        if generators is None:
            generators = greedy_generators(self)
        self.generators = tuple(int(g) for g in generators)

    def _mul_array(self, a, b):
        return self._table[a, b]

    def label(self, a):
        if self.labels is not None:
            return self.labels[a]
        return str(int(a))


class CyclicGroup(FiniteGroup):

    def __init__(self, n, name=None):
        if n < 1:
            raise InvalidInput('cyclic group order must be positive')
        super(CyclicGroup, self).__init__(
            n, identity=0, generators=(1,) if n > 1 else (),
            name=name or ('trivial' if n == 1 else 'Z%d' % n))

    def _mul_array(self, a, b):
        return (a + b) % self.order

    def _inverse_array(self, a):
        return (-a) % self.order


def compose(sigma, tau):
    """(sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t] for t in tau)


def invert(sigma):
    result = [0] * len(sigma)
    for i, s in enumerate(sigma):
        result[s] = i
    return tuple(result)


def cycle_string(perm):
    seen = set()
    parts = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            seen.add(i)
            continue
        cycle = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cycle.append(j)
            seen.add(j)
            j = perm[j]
        parts.append('(%s)' % ' '.join(str(c + 1) for c in cycle))
    return ''.join(parts) or '()'


class PermutationGroup(FiniteGroup):
    """A group of permutations of 0..degree-1, elements in lexicographic order."""

    MAX_DEGREE = 15

    def __init__(self, perms, generators, degree, name=None):
        if degree > self.MAX_DEGREE:
            raise InvalidInput('permutation degree %d exceeds %d' % (degree, self.MAX_DEGREE))
        perms = sorted(perms)
        self.degree = degree
        self.perms = np.array(perms, dtype=np.int64).reshape(len(perms), degree)
        self._weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
        self._codes = self.perms @ self._weights
        index = {p: i for i, p in enumerate(perms)}
        super(PermutationGroup, self).__init__(
            len(perms), identity=index[tuple(range(degree))],
            generators=[index[tuple(g)] for g in generators], name=name)

    def index_of(self, perm):
        code = int(np.asarray(perm, dtype=np.int64) @ self._weights)
        i = int(np.searchsorted(self._codes, code))
        if i >= self.order or self._codes[i] != code:
            raise InvalidInput('%r is not an element of %s' % (tuple(perm), self.name))
        return i

    def _lookup(self, perms):
        return np.searchsorted(self._codes, perms @ self._weights)

    def _mul_array(self, a, b):
        shape = a.shape
        composed = np.take_along_axis(self.perms[a.ravel()], self.perms[b.ravel()], axis=1)
        return self._lookup(composed).reshape(shape)

    def _inverse_array(self, a):
        return self._lookup(np.argsort(self.perms[a], axis=1))

    def perm(self, a):
        return tuple(int(x) for x in self.perms[a])

    def label(self, a):
        return cycle_string(self.perm(a))


class ProductGroup(FiniteGroup):
    """Direct product A x B, element (a, b) stored as a·|B| + b."""

    def __init__(self, left, right, name=None):
        self.left = left
        self.right = right
        generators = [self.encode(g, right.identity) for g in left.generators] + \
                     [self.encode(left.identity, g) for g in right.generators]
        super(ProductGroup, self).__init__(
            left.order * right.order, identity=self.encode(left.identity, right.identity),
            generators=generators, name=name or '%s x %s' % (left.name, right.name))

    def encode(self, a, b):
        return a * self.right.order + b

    def decode(self, x):
        return divmod(x, self.right.order)

    def _mul_array(self, a, b):
        a1, a2 = np.divmod(a, self.right.order)
        b1, b2 = np.divmod(b, self.right.order)
        return self.left.mul_array(a1, b1) * self.right.order + self.right.mul_array(a2, b2)

    def _inverse_array(self, a):
        a1, a2 = np.divmod(a, self.right.order)
        return self.left.inv[a1] * self.right.order + self.right.inv[a2]

    def label(self, x):
        a, b = self.decode(int(x))
        return '(%s, %s)' % (self.left.label(a), self.right.label(b))


def closure(group, generators):
    """Returns a boolean mask of the subgroup generated by `generators`."""
    generators = np.asarray(list(generators), dtype=np.int64)
    reached = np.zeros(group.order, dtype=bool)
    reached[group.identity] = True
    frontier = np.array([group.identity], dtype=np.int64)
    while frontier.size and generators.size:
        images = group.mul_array(frontier[:, None], generators[None, :]).ravel()
        images = np.unique(images)
        frontier = images[~reached[images]]
        reached[frontier] = True
    return reached


def subgroup_generated(group, generators):
    return [int(x) for x in np.flatnonzero(closure(group, generators))]


def greedy_generators(group):
    """A small generating set: add the least element not yet generated."""
    generators = []
    reached = closure(group, generators)
    while not reached.all():
        generators.append(int(np.argmin(reached)))
        reached = closure(group, generators)
    return generators


def close_permutations(generators, degree, max_order=default_config.MAX_GROUP_ORDER):
    """All products of the generating permutations, as a set of tuples."""
    identity = tuple(range(degree))
    generators = [tuple(g) for g in generators]
    for g in generators:
        if len(g) != degree or sorted(g) != list(identity):
            raise InvalidInput('%r is not a permutation of 0..%d' % (g, degree - 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for p in frontier:
            for g in generators:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    new.append(q)
        if len(seen) > max_order:
            raise LimitExceeded('permutation group exceeds %d elements' % max_order)
        frontier = new
    return seen


def symmetric_group(n, max_order=default_config.MAX_GROUP_ORDER):
    if n < 1:
        raise InvalidInput('symmetric group degree must be positive')
    order = 1
    for i in range(2, n + 1):
        order *= i
    if order > max_order:
        raise LimitExceeded('S%d has %d elements, more than %d' % (n, order, max_order))
    perms = list(itertools.permutations(range(n)))
    generators = []
    if n >= 2:
        generators.append((1, 0) + tuple(range(2, n)))
    if n >= 3:
        generators.append(tuple(range(1, n)) + (0,))
    return PermutationGroup(perms, generators, n, name='S%d' % n)


def permutation_group(generators, degree, max_order=default_config.MAX_GROUP_ORDER, name=None):
    perms = close_permutations(generators, degree, max_order=max_order)
    return PermutationGroup(perms, generators, degree, name=name)


def direct_product(*factors):
    if not factors:
        raise InvalidInput('direct product needs at least one factor')
    result = factors[0]
    for factor in factors[1:]:
        result = ProductGroup(result, factor)
    return result


def validate_group(group, exhaustive_order=default_config.EXHAUSTIVE_CHECK_ORDER,
                   samples=default_config.SAMPLED_TRIPLES, seed=default_config.SEED):
    """Checks the group axioms and that the generators generate.

    Associativity is checked on every triple up to `exhaustive_order`
    elements and on `samples` random triples above.
    """
    elements = group.elements
    e = group.identity
    if not (np.array_equal(group.left_row(e), elements) and
            np.array_equal(group.right_column(e), elements)):
        raise InvalidInput('%s: identity is not a two-sided unit' % group.name)
    inv = group.inv
    if not (np.all(group.mul_array(elements, inv) == e) and np.all(group.mul_array(inv, elements) == e)):
        raise InvalidInput('%s: inverse table is not two-sided' % group.name)
    if group.order <= exhaustive_order:
        x, y = np.meshgrid(elements, elements, indexing='ij')
        xy = group.mul_array(x, y)
        for a in range(group.order):
            if not np.array_equal(group.mul_array(group.mul_array(a, x), y), group.mul_array(a, xy)):
                raise InvalidInput('%s: multiplication is not associative' % group.name)
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, group.order, size=(3, samples))
        if not np.array_equal(group.mul_array(group.mul_array(a, b), c),
                              group.mul_array(a, group.mul_array(b, c))):
            raise InvalidInput('%s: multiplication is not associative' % group.name)
    if not closure(group, group.generators).all():
        raise InvalidInput('%s: generators do not generate the group' % group.name)
    logger.debug('Validated %s (order %d)', group.name, group.order)
    return group


class ConjClassTable(object):

    def __init__(self, class_of, representatives, class_sizes):
        self.class_of = class_of
        self.representatives = representatives
        self.class_sizes = class_sizes

    def __len__(self):
        return len(self.representatives)

    def members(self, i):
        return [int(g) for g in np.flatnonzero(self.class_of == i)]


def conjugacy_classes(group):
    """Conjugacy classes ordered by their least element, which is the representative.

    Every element repeatedly takes the least label among its conjugates by the
    generators (both directions) and the label of its label, until nothing moves.
    """
    elements = group.elements
    moves = []
    for s in group.generators:
        move = group.conjugate_array(s, elements)
        moves.extend([move, np.argsort(move)])
    label = elements.copy()
    while True:
        previous = label
        for move in moves:
            label = np.minimum(label, label[move])
        label = label[label]
        if np.array_equal(label, previous):
            break
    representatives, class_of = np.unique(label, return_inverse=True)
    sizes = np.bincount(class_of, minlength=len(representatives))
    return ConjClassTable(class_of, representatives.tolist(), sizes.tolist())


def centralizer_mask(group, elements):
    mask = np.ones(group.order, dtype=bool)
    for s in elements:
        mask &= group.right_column(s) == group.left_row(s)
    return mask


def centralizer(group, elements):
    """{x : x s = s x for all s}, as a sorted element list."""
    return [int(x) for x in np.flatnonzero(centralizer_mask(group, elements))]


def element_order(group, g):
    k, x = 1, g
    while x != group.identity:
        x = group.mul(x, g)
        k += 1
    return k


def is_abelian(group):
    return all(group.mul(a, b) == group.mul(b, a)
               for a in group.generators for b in group.generators)
