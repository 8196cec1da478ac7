"""
Sublattices of Z^d in Hermite normal form.

Rows are basis vectors. The basis is lower triangular with positive diagonal
and every entry below the diagonal reduced modulo the diagonal entry of its
column: 0 <= B[i][j] < B[j][j] for j < i.
"""
import collections
import itertools

from orbicount.exceptions import InvalidInput
from orbicount.utils import divisors

MAX_DIMENSION = 3


class Sublattice(collections.namedtuple('Sublattice', ['basis'])):
    __slots__ = ()

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def index(self):
        result = 1
        for i, row in enumerate(self.basis):
            result *= row[i]
        return result

    @property
    def diagonal(self):
        return tuple(row[i] for i, row in enumerate(self.basis))

    def scaled(self, d):
        return hnf([[d * x for x in row] for row in self.basis])

    def sublattice(self, inner):
        """Pushes a sublattice given in this lattice's own coordinates to the ambient lattice."""
        rows = [[sum(c * self.basis[k][j] for k, c in enumerate(row)) for j in range(self.dimension)]
                for row in inner.basis]
        return hnf(rows)

    def reduce(self, vector):
        """The representative of `vector` modulo the lattice inside the diagonal box."""
        v = list(vector)
        for i in range(self.dimension - 1, -1, -1):
            q = v[i] // self.basis[i][i]
            if q:
                row = self.basis[i]
                for j in range(i + 1):
                    v[j] -= q * row[j]
        return tuple(v)

    def contains(self, vector):
        return not any(self.reduce(vector))

    def coordinates(self, vector):
        """Integer coefficients c with vector = sum c_i basis_i."""
        v = list(vector)
        coefficients = [0] * self.dimension
        for i in range(self.dimension - 1, -1, -1):
            q, r = divmod(v[i], self.basis[i][i])
            if r:
                raise InvalidInput('%r is not in the sublattice' % (tuple(vector),))
            coefficients[i] = q
            for j in range(i + 1):
                v[j] -= q * self.basis[i][j]
        return coefficients

    def __str__(self):
        return str([list(row) for row in self.basis])


def hnf(rows):
    """Hermite normal form of the lattice spanned by `rows` (must have full rank)."""
    rows = [list(r) for r in rows]
    if not rows:
        raise InvalidInput('no rows given')
    d = len(rows[0])
    active = [r for r in rows if any(r)]
    basis = [None] * d
    for j in range(d - 1, -1, -1):
        while True:
            nonzero = [r for r in active if r[j] != 0]
            if not nonzero:
                raise InvalidInput('rows do not span a finite-index sublattice')
            pivot = min(nonzero, key=lambda r: abs(r[j]))
            done = True
            for r in nonzero:
                if r is pivot:
                    continue
                q = r[j] // pivot[j]
                for k in range(j + 1):
                    r[k] -= q * pivot[k]
                if r[j] != 0:
                    done = False
            if done:
                break
        active = [r for r in active if r is not pivot and any(r)]
        if pivot[j] < 0:
            pivot = [-x for x in pivot]
        basis[j] = pivot
    for i in range(d):
        for j in range(i - 1, -1, -1):
            q = basis[i][j] // basis[j][j]
            if q:
                for k in range(j + 1):
                    basis[i][k] -= q * basis[j][k]
    return Sublattice(tuple(tuple(row) for row in basis))


def _diagonals(d, n):
    if d == 1:
        yield (n,)
        return
    for a in divisors(n):
        for rest in _diagonals(d - 1, n // a):
            yield (a,) + rest


def enumerate_sublattices(d, n):
    """All index-n sublattices of Z^d, each exactly once, in HNF."""
    if not 1 <= d <= MAX_DIMENSION:
        raise InvalidInput('dimension must be between 1 and %d' % MAX_DIMENSION)
    if n < 1:
        raise InvalidInput('index must be positive')
    result = []
    for diagonal in _diagonals(d, n):
        slots = [(i, j) for i in range(d) for j in range(i)]
        ranges = [range(diagonal[j]) for (i, j) in slots]
        for values in itertools.product(*ranges):
            basis = [[0] * d for _ in range(d)]
            for i in range(d):
                basis[i][i] = diagonal[i]
            for (i, j), v in zip(slots, values):
                basis[i][j] = v
            result.append(Sublattice(tuple(tuple(row) for row in basis)))
    result.sort()
    return result


def ambient(d):
    return Sublattice(tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))
