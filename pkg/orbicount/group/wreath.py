"""
Wreath products G ≀ S_n.

An element ((g_0..g_{n-1}), σ) is stored as

    perm_index(σ) · |G|^n + Σ g_i · |G|^i

with permutations of 0..n-1 numbered in lexicographic order. The product law
is ((g), σ)((h), τ) = ((g_i · h_{σ^-1(i)})_i, στ) and the group acts on the
left of M^n by (w·x)_i = g_i · x_{σ^-1(i)}.
"""
import collections
import itertools
import math

import numpy as np

from orbicount import default_config
from orbicount.exceptions import InvalidInput, LimitExceeded
from orbicount.group.finite import FiniteGroup, invert

WreathElement = collections.namedtuple('WreathElement', ['base', 'perm'])


class WreathGroup(FiniteGroup):

    def __init__(self, base, n, max_order=default_config.MAX_GROUP_ORDER):
        if n < 1:
            raise InvalidInput('wreath degree must be positive')
        order = base.order ** n * math.factorial(n)
        if order > max_order:
            raise LimitExceeded('%s wr S%d has %d elements, more than %d' % (base.name, n, order, max_order))
        self.base = base
        self.n = n
        count = math.factorial(n)
        self.perms = np.fromiter(itertools.chain.from_iterable(itertools.permutations(range(n))),
                                 dtype=np.int64, count=count * n).reshape(count, n)
        self._perm_weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self._perm_codes = self.perms @ self._perm_weights
        self._perm_inverse = self._perm_lookup(np.argsort(self.perms, axis=1))
        self._radix = base.order ** np.arange(n, dtype=np.int64)
        self.base_size = base.order ** n

        identity = self.encode(WreathElement((base.identity,) * n, tuple(range(n))))
        generators = []
        for s in base.generators:
            generators.append(self.encode(WreathElement((s,) + (base.identity,) * (n - 1), tuple(range(n)))))
        if n >= 2:
            generators.append(self.encode(WreathElement((base.identity,) * n, (1, 0) + tuple(range(2, n)))))
        if n >= 3:
            generators.append(self.encode(WreathElement((base.identity,) * n, tuple(range(1, n)) + (0,))))
        super(WreathGroup, self).__init__(order, identity=identity, generators=generators,
                                          name='%s wr S%d' % (base.name, n))

    def _perm_lookup(self, perms):
        return np.searchsorted(self._perm_codes, perms @ self._perm_weights)

    def encode(self, element):
        base, perm = element
        if len(base) != self.n or len(perm) != self.n:
            raise InvalidInput('wreath element must have %d coordinates' % self.n)
        perm_index = int(self._perm_lookup(np.asarray(perm, dtype=np.int64)))
        return perm_index * self.base_size + int(np.dot(np.asarray(base, dtype=np.int64), self._radix))

    def decode(self, x):
        base, perm = self.decode_array(np.asarray([x], dtype=np.int64))
        return WreathElement(tuple(int(g) for g in base[0]), tuple(int(i) for i in self.perms[perm[0]]))

    def decode_array(self, xs):
        """Returns (base coordinates of shape (len, n), permutation indices)."""
        perm_index, rest = np.divmod(xs, self.base_size)
        base = (rest[:, None] // self._radix[None, :]) % self.base.order
        return base, perm_index

    def _encode_array(self, base, perm_index):
        return perm_index * self.base_size + base @ self._radix

    def _mul_array(self, a, b):
        shape = a.shape
        g, sigma = self.decode_array(a.ravel())
        h, tau = self.decode_array(b.ravel())
        sigma_inverse = self.perms[self._perm_inverse[sigma]]
        h_moved = np.take_along_axis(h, sigma_inverse, axis=1)
        base = self.base.mul_array(g, h_moved)
        perm = self._perm_lookup(np.take_along_axis(self.perms[sigma], self.perms[tau], axis=1))
        return self._encode_array(base, perm).reshape(shape)

    def _inverse_array(self, a):
        shape = a.shape
        g, sigma = self.decode_array(a.ravel())
        # inverse of ((g), σ) is ((g_{σ(j)}^-1)_j, σ^-1)
        base = self.base.inv[np.take_along_axis(g, self.perms[sigma], axis=1)]
        return self._encode_array(base, self._perm_inverse[sigma]).reshape(shape)

    def permutation(self, x):
        return self.decode(x).perm

    def label(self, x):
        element = self.decode(int(x))
        return '((%s), %s)' % (', '.join(self.base.label(g) for g in element.base),
                               list(element.perm))


def wreath_product(base, n, max_order=default_config.MAX_GROUP_ORDER):
    return WreathGroup(base, n, max_order=max_order)


def wreath_action(element, x, action):
    """Applies a wreath element to a point of M^n.

    `action` is the G-action table on M (rows indexed by elements of G).
    """
    base, perm = element
    sigma_inverse = invert(perm)
    return tuple(int(action[base[i]][x[sigma_inverse[i]]]) for i in range(len(base)))
