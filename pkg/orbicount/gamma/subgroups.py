"""
Finite-index subgroups as pointed transitive coset actions.

A subgroup H of index n is stored as the right action of the generators of Γ
on the cosets {0..n-1}, with H the stabilizer of the basepoint 0:
`table[i][x]` is x·a_(i+1). Tables are kept standardized: scanning points in
increasing order and, for each point, the letters a_1..a_k, a_1^-1..a_k^-1,
new points appear in increasing order. Conjugate subgroups differ only by the
choice of basepoint, so the least standardized table over all basepoints is
a canonical form for the conjugacy class.
"""
import collections
import itertools
import logging
import math

from orbicount import default_config
from orbicount.exceptions import InvalidInput, InvariantViolation, UnsupportedOperation
from orbicount.gamma.lattice import enumerate_sublattices, hnf
from orbicount.gamma.presentation import (FREE_ABELIAN, PRESENTED, check_word,
                                          exponent_sums, free_reduce, inverse_word)
from orbicount.utils import UnionFind, check_budget, check_search_budget

logger = logging.getLogger(__name__)


def _letters(rank):
    return list(range(1, rank + 1)) + [-i for i in range(1, rank + 1)]


def _inverse_tables(table):
    inverse = []
    for row in table:
        inv = [0] * len(row)
        for x, y in enumerate(row):
            inv[y] = x
        inverse.append(tuple(inv))
    return tuple(inverse)


def standardize(table, basepoint=0):
    """Relabels a complete transitive table so that `basepoint` becomes 0.

    Returns the standardized table and the relabelling (old point -> new point).
    """
    n = len(table[0])
    rank = len(table)
    inverse = _inverse_tables(table)
    label = {basepoint: 0}
    order = [basepoint]
    position = 0
    while position < len(order):
        x = order[position]
        position += 1
        for letter in _letters(rank):
            y = table[letter - 1][x] if letter > 0 else inverse[-letter - 1][x]
            if y not in label:
                label[y] = len(order)
                order.append(y)
    if len(order) != n:
        raise InvalidInput('coset action is not transitive')
    relabelled = tuple(tuple(label[row[order[new]]] for new in range(n)) for row in table)
    return relabelled, label


class SubgroupClass(object):
    """A conjugacy class of finite-index subgroups, H = Stab(0) of `table`."""

    def __init__(self, gamma, table, sublattice=None):
        self.gamma = gamma
        self.table = tuple(tuple(row) for row in table)
        self.sublattice = sublattice
        self._inverse = None
        self._canonical = None
        self._deck = None
        self._tree = None
        self._schreier = None

    @property
    def degree(self):
        return len(self.table[0])

    index = degree

    @property
    def inverse_table(self):
        if self._inverse is None:
            self._inverse = _inverse_tables(self.table)
        return self._inverse

    def act(self, x, letter):
        if letter > 0:
            return self.table[letter - 1][x]
        return self.inverse_table[-letter - 1][x]

    def trace(self, x, word):
        for letter in word:
            x = self.act(x, letter)
        return x

    def contains(self, word):
        check_word(word, self.gamma.rank)
        return self.trace(0, word) == 0

    @property
    def canonical_form(self):
        if self._canonical is None:
            self._canonical = min(standardize(self.table, b)[0] for b in range(self.degree))
        return self._canonical

    def is_canonical(self):
        return self.table == self.canonical_form

    def key(self):
        return (self.degree, self.canonical_form)

    def __eq__(self, other):
        return isinstance(other, SubgroupClass) and self.gamma == other.gamma and \
            self.table == other.table

    def __hash__(self):
        return hash((self.gamma, self.table))

    def __repr__(self):
        return '<SubgroupClass index %d of %s>' % (self.degree, self.gamma.name())

    def to_json(self):
        data = {'index': self.degree,
                'coset_table': [list(row) for row in self.table],
                'deck_order': deck_group(self).order}
        if self.sublattice is not None:
            data['hnf'] = [list(row) for row in self.sublattice.basis]
        return data

    # spanning tree of the coset graph, in scan order
    def tree(self):
        if self._tree is None:
            words = {0: ()}
            tree_edges = set()
            order = [0]
            position = 0
            while position < len(order):
                x = order[position]
                position += 1
                for letter in _letters(self.gamma.rank):
                    y = self.act(x, letter)
                    if y not in words:
                        words[y] = words[x] + (letter,)
                        order.append(y)
                        if letter > 0:
                            tree_edges.add((x, letter - 1))
                        else:
                            tree_edges.add((y, -letter - 1))
            self._tree = (words, tree_edges)
        return self._tree

    def transversal(self, x):
        """The tree word u with 0·u = x."""
        return self.tree()[0][x]


def from_sublattice(gamma, sublattice):
    """The coset action of Z^d on Z^d / L, standardized from the zero coset."""
    d = sublattice.dimension
    diagonal = sublattice.diagonal
    points = [()]
    for i in range(d):
        points = [p + (v,) for v in range(diagonal[i]) for p in points]
    index = {p: k for k, p in enumerate(points)}
    table = []
    for i in range(d):
        row = []
        for p in points:
            q = list(p)
            q[i] += 1
            row.append(index[sublattice.reduce(q)])
        table.append(tuple(row))
    standardized, _ = standardize(tuple(table), index[(0,) * d])
    return SubgroupClass(gamma, standardized, sublattice=sublattice)


def _consistent(fwd, bwd, relators, count):
    for relator in relators:
        for start in range(count):
            x = start
            for letter in relator:
                x = fwd[letter - 1][x] if letter > 0 else bwd[-letter - 1][x]
                if x < 0:
                    break
            else:
                if x != start:
                    return False
    return True


def iter_coset_tables(gamma, n, budget=None, max_nodes=default_config.MAX_SEARCH_NODES):
    """Yields every standardized transitive coset table of degree n.

    Each index-n subgroup is produced exactly once, as the table of its
    cosets with the subgroup at point 0.
    """
    rank = gamma.rank
    relators = gamma.coset_relators()
    fwd = [[-1] * n for _ in range(rank)]
    bwd = [[-1] * n for _ in range(rank)]
    letters = _letters(rank)
    nodes = [0]

    def first_undefined(count):
        for x in range(count):
            for letter in letters:
                if letter > 0 and fwd[letter - 1][x] < 0:
                    return x, letter
                if letter < 0 and bwd[-letter - 1][x] < 0:
                    return x, letter
        return None

    def search(count):
        nodes[0] += 1
        if nodes[0] % 4096 == 0:
            check_budget(budget, 'subgroup search')
            check_search_budget(nodes[0], max_nodes, 'subgroup search for index %d' % n)
        slot = first_undefined(count)
        if slot is None:
            if count == n:
                yield tuple(tuple(row) for row in fwd)
            return
        x, letter = slot
        i = abs(letter) - 1
        targets = list(range(count))
        if count < n:
            targets.append(count)
        for y in targets:
            if letter > 0:
                if bwd[i][y] >= 0:
                    continue
                fwd[i][x], bwd[i][y] = y, x
            else:
                if fwd[i][y] >= 0:
                    continue
                bwd[i][x], fwd[i][y] = y, x
            new_count = count + 1 if y == count else count
            if _consistent(fwd, bwd, relators, new_count):
                for table in search(new_count):
                    yield table
            if letter > 0:
                fwd[i][x], bwd[i][y] = -1, -1
            else:
                bwd[i][x], fwd[i][y] = -1, -1

    if n == 1:
        yield tuple((0,) for _ in range(rank))
        return
    for table in search(1):
        yield table
    logger.debug('Coset search for index %d of %s visited %d nodes', n, gamma.name(), nodes[0])


def enumerate_subgroup_classes(gamma, n, budget=None, max_nodes=default_config.MAX_SEARCH_NODES):
    """One representative per conjugacy class of index-n subgroups.

    Representatives are canonical tables, sorted by canonical form. For free
    abelian Γ every subgroup is its own class and comes from the HNF
    enumeration.
    """
    if n < 1:
        raise InvalidInput('index must be positive')
    if gamma.kind == FREE_ABELIAN:
        return [from_sublattice(gamma, lattice) for lattice in enumerate_sublattices(gamma.rank, n)]
    seen = {}
    for table in iter_coset_tables(gamma, n, budget=budget, max_nodes=max_nodes):
        subgroup = SubgroupClass(gamma, table)
        canonical = subgroup.canonical_form
        if canonical not in seen:
            seen[canonical] = SubgroupClass(gamma, canonical)
    result = [seen[k] for k in sorted(seen)]
    logger.debug('%d subgroup classes of index %d in %s', len(result), n, gamma.name())
    return result


def count_subgroups(gamma, n, budget=None, max_nodes=default_config.MAX_SEARCH_NODES):
    """Number of index-n subgroups (not classes)."""
    if gamma.kind == FREE_ABELIAN:
        return len(enumerate_sublattices(gamma.rank, n))
    return sum(1 for _ in iter_coset_tables(gamma, n, budget=budget, max_nodes=max_nodes))


def subgroups_from_classes(classes):
    """Reconstructs the subgroup count: each class has n/|deck| members."""
    return sum(H.degree // deck_group(H).order for H in classes)


def _orbit_labels(perm):
    uf = UnionFind(len(perm))
    uf.union_many(range(len(perm)), perm)
    return tuple(uf.labels()[0])


def _join(first, second):
    """Finest partition coarser than both (blocks given as label tuples)."""
    uf = UnionFind(len(first))
    for labels in (first, second):
        least = {}
        for x, label in enumerate(labels):
            uf.union(x, least.setdefault(label, x))
    return tuple(uf.labels()[0])


def count_free_subgroups_by_actions(rank, n, budget=None):
    """Index-n subgroups of the free group of `rank`, from permutation tuples.

    Counts the tuples in S_n^rank that generate a transitive group by
    convolving the orbit partitions of single permutations; each subgroup is
    the stabilizer of 0 for exactly (n-1)! of them.
    """
    if n < 1:
        raise InvalidInput('index must be positive')
    single = collections.Counter(_orbit_labels(perm) for perm in itertools.permutations(range(n)))
    partitions = collections.Counter(single)
    for _ in range(rank - 1):
        check_budget(budget, 'transitive actions of degree %d' % n)
        joined = collections.Counter()
        for first, a in partitions.items():
            for second, b in single.items():
                joined[_join(first, second)] += a * b
        partitions = joined
    transitive = partitions[(0,) * n]
    value, remainder = divmod(transitive, math.factorial(n - 1))
    if remainder:
        raise InvariantViolation('%d transitive tuples of degree %d is not a multiple of %d!'
                                 % (transitive, n, n - 1))
    return value


class DeckGroup(object):
    """Deck transformations N_Γ(H)/H acting on the points with stabilizer H.

    `maps[j]` is the covering translation sending 0·w to j·w; the product of
    j and k is maps[j][k].
    """

    def __init__(self, elements, maps):
        self.elements = elements
        self.maps = maps

    @property
    def order(self):
        return len(self.elements)

    def law(self, j, k):
        return self.maps[j][k]

    def inverse(self, j):
        return next(k for k in self.elements if self.maps[j][k] == 0)

    def __contains__(self, j):
        return j in self.maps


def deck_group(subgroup):
    if subgroup._deck is None:
        reference = standardize(subgroup.table, 0)[0]
        elements = []
        maps = {}
        for j in range(subgroup.degree):
            table, label = standardize(subgroup.table, j)
            if table == reference:
                unlabel = [0] * subgroup.degree
                for old, new in label.items():
                    unlabel[new] = old
                elements.append(j)
                maps[j] = tuple(unlabel)
        subgroup._deck = DeckGroup(elements, maps)
    return subgroup._deck


def _require_rewritable(subgroup):
    if subgroup.gamma.kind == PRESENTED:
        raise UnsupportedOperation('subgroup generators are only available for free and free abelian groups')


def _tree_schreier(subgroup):
    """Schreier words u_x·a_i·u_y^-1 for the non-tree edges x·a_i = y, with their edges."""
    words_to, tree_edges = subgroup.tree()
    words, edges = [], []
    for x in range(subgroup.degree):
        for i in range(subgroup.gamma.rank):
            if (x, i) in tree_edges:
                continue
            y = subgroup.table[i][x]
            words.append(free_reduce(words_to[x] + (i + 1,) + inverse_word(words_to[y])))
            edges.append((x, i))
    return words, edges


def stabilizer_sublattice(subgroup):
    """For Γ = Z^d: the sublattice of exponent vectors of words fixing the basepoint."""
    words, _ = _tree_schreier(subgroup)
    rank = subgroup.gamma.rank
    return hnf([exponent_sums(w, rank) for w in words] +
               [[subgroup.degree if i == j else 0 for j in range(rank)] for i in range(rank)])


def schreier_generators(subgroup):
    """Words in Γ's generators forming a free (or free abelian) basis of H."""
    _require_rewritable(subgroup)
    if subgroup._schreier is None:
        if subgroup.gamma.kind == FREE_ABELIAN:
            if subgroup.sublattice is None:
                subgroup.sublattice = stabilizer_sublattice(subgroup)
            words = []
            for row in subgroup.sublattice.basis:
                word = ()
                for j, c in enumerate(row):
                    word += (j + 1,) * c
                words.append(word)
            edges = {}
        else:
            words, edges = _tree_schreier(subgroup)
            edges = {e: k for k, e in enumerate(edges)}
        subgroup._schreier = (tuple(words), edges)
    return list(subgroup._schreier[0])


def rewrite(subgroup, word):
    """Expresses an element of H (a word in Γ) in the Schreier generators.

    The result is a word whose letters index the Schreier generators.
    """
    _require_rewritable(subgroup)
    check_word(word, subgroup.gamma.rank)
    if subgroup.trace(0, word) != 0:
        raise InvalidInput('word %r is not in the subgroup' % (tuple(word),))
    schreier_generators(subgroup)
    if subgroup.gamma.kind == FREE_ABELIAN:
        coefficients = subgroup.sublattice.coordinates(exponent_sums(word, subgroup.gamma.rank))
        result = ()
        for i, c in enumerate(coefficients):
            result += ((i + 1) if c > 0 else -(i + 1),) * abs(c)
        return result
    edges = subgroup._schreier[1]
    result = []
    x = 0
    for letter in word:
        if letter > 0:
            edge = (x, letter - 1)
            if edge in edges:
                result.append(edges[edge] + 1)
            x = subgroup.table[letter - 1][x]
        else:
            y = subgroup.inverse_table[-letter - 1][x]
            edge = (y, -letter - 1)
            if edge in edges:
                result.append(-(edges[edge] + 1))
            x = y
    return free_reduce(result)


def expand(subgroup, schreier_word):
    """Inverse of `rewrite`: a word in the Schreier generators back in Γ."""
    generators = schreier_generators(subgroup)
    result = ()
    for letter in schreier_word:
        word = generators[abs(letter) - 1]
        result += word if letter > 0 else inverse_word(word)
    return free_reduce(result)


def conjugate_into_generators(subgroup, u, h_word):
    """Rewrites u^-1·h·u in the Schreier generators; u must normalize H."""
    _require_rewritable(subgroup)
    check_word(u, subgroup.gamma.rank)
    if subgroup.trace(0, u) not in deck_group(subgroup):
        raise InvalidInput('word %r does not normalize the subgroup' % (tuple(u),))
    if subgroup.trace(0, h_word) != 0:
        raise InvalidInput('word %r is not in the subgroup' % (tuple(h_word),))
    return rewrite(subgroup, free_reduce(inverse_word(u) + tuple(h_word) + tuple(u)))
