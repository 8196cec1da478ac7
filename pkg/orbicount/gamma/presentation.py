"""
Finitely generated domain groups and words in their generators.

A word is a tuple of nonzero integers: +i is the i-th generator (1-based)
and -i its inverse.
"""
from orbicount.exceptions import InvalidInput, ParserError
from orbicount.parser import Parser

FREE_ABELIAN = 'free-abelian'
FREE = 'free'
PRESENTED = 'presented'

GAMMA_KINDS = (FREE_ABELIAN, FREE, PRESENTED)


def free_reduce(word):
    stack = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def inverse_word(word):
    return tuple(-letter for letter in reversed(word))


def exponent_sums(word, rank):
    sums = [0] * rank
    for letter in word:
        sums[abs(letter) - 1] += 1 if letter > 0 else -1
    return sums


class GammaSpec(object):

    def __init__(self, kind, rank, relators=()):
        if kind not in GAMMA_KINDS:
            raise InvalidInput('unknown gamma kind `%s`' % kind)
        if rank < 1:
            raise InvalidInput('gamma rank must be at least 1')
        self.kind = kind
        self.rank = rank
        reduced = []
        for relator in relators:
            for letter in relator:
                if letter == 0 or abs(letter) > rank:
                    raise InvalidInput('relator letter %d out of range for rank %d' % (letter, rank))
            relator = free_reduce(relator)
            if not relator:
                raise InvalidInput('relators must be nonempty after free reduction')
            reduced.append(relator)
        self.relators = tuple(reduced)

    @classmethod
    def free(cls, rank):
        return cls(FREE, rank)

    @classmethod
    def free_abelian(cls, rank):
        return cls(FREE_ABELIAN, rank)

    @classmethod
    def presented(cls, rank, relators):
        return cls(PRESENTED, rank, relators)

    @property
    def is_abelian(self):
        """True for the kinds known to be abelian (presented groups are never recognised)."""
        return self.kind == FREE_ABELIAN or (self.kind == FREE and self.rank == 1)

    @property
    def is_cyclic_free(self):
        return self.rank == 1 and self.kind in (FREE, FREE_ABELIAN)

    def coset_relators(self):
        """Relators that a coset action must respect."""
        if self.kind == FREE_ABELIAN:
            return tuple((i, j, -i, -j) for i in range(1, self.rank + 1)
                         for j in range(i + 1, self.rank + 1))
        return self.relators

    def name(self):
        if self.kind == PRESENTED:
            return 'presented(%d, %d relators)' % (self.rank, len(self.relators))
        return '%s(%d)' % (self.kind, self.rank)

    def __eq__(self, other):
        return isinstance(other, GammaSpec) and \
            (self.kind, self.rank, self.relators) == (other.kind, other.rank, other.relators)

    def __hash__(self):
        return hash((self.kind, self.rank, self.relators))

    def __repr__(self):
        return '<GammaSpec %s>' % self.name()

    def to_json(self):
        data = {'kind': self.kind, 'rank': self.rank}
        if self.kind == PRESENTED:
            data['relators'] = [list(r) for r in self.relators]
        return data


def load_gamma_spec(spec, path=''):
    kind = Parser.string(spec, 'kind', path, valid_values=GAMMA_KINDS)
    rank = Parser.int(spec, 'rank', path, min=1)
    relators = []
    if kind == PRESENTED:
        location = Parser.location(path, 'relators')
        for i, relator in enumerate(Parser.list(spec, 'relators', path)):
            where = '%s[%d]' % (location, i)
            letters = Parser.int_list(relator, where, min=-rank, max=rank)
            if 0 in letters:
                raise ParserError(where, 'letters must be nonzero')
            if not free_reduce(letters):
                raise ParserError(where, 'is trivial after free reduction')
            relators.append(tuple(letters))
    return GammaSpec(kind, rank, relators)


def check_word(word, rank):
    for letter in word:
        if letter == 0 or abs(letter) > rank:
            raise InvalidInput('letter %d out of range for rank %d' % (letter, rank))


def evaluate_word(word, images, group):
    """Product of the generator images (or their inverses) along `word`."""
    check_word(word, len(images))
    result = group.identity
    for letter in word:
        g = images[letter - 1] if letter > 0 else group.inverse(images[-letter - 1])
        result = group.mul(result, g)
    return result


def is_hom(images, gamma, group):
    if len(images) != gamma.rank:
        raise InvalidInput('expected %d images, got %d' % (gamma.rank, len(images)))
    if gamma.kind == FREE_ABELIAN:
        return all(group.mul(a, b) == group.mul(b, a)
                   for i, a in enumerate(images) for b in images[i + 1:])
    if gamma.kind == FREE:
        return True
    return all(evaluate_word(r, images, group) == group.identity for r in gamma.relators)
