import logging
import math
import time

from orbicount.exceptions import BudgetExceeded, LimitExceeded

logger = logging.getLogger(__name__)


def divisors(n):
    """Returns the positive divisors of `n` in increasing order."""
    if n < 1:
        raise ValueError('divisors of %r' % n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma1(n):
    return sum(divisors(n))


def partition_numbers(n_max):
    """Partition numbers p(0..n_max) from the pentagonal number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def hall_counts(rank, n_max):
    """Number of index-n subgroups of the free group of the given rank.

    Uses the recursion a_n = n (n!)^(k-1) - sum_{i<n} ((n-i)!)^(k-1) a_i.
    """
    a = [0, 1]
    for n in range(2, n_max + 1):
        value = n * math.factorial(n) ** (rank - 1)
        for i in range(1, n):
            value -= math.factorial(n - i) ** (rank - 1) * a[i]
        a.append(value)
    return a[1:n_max + 1]


class UnionFind(object):
    """Disjoint sets over the integers 0..size-1."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return x
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return x

    def union_many(self, xs, ys):
        for x, y in zip(xs, ys):
            self.union(int(x), int(y))

    def roots(self):
        return [x for x in range(len(self.parent)) if self.parent[x] == x]

    def labels(self):
        """Returns (labels, count): a dense block id per element.

        Blocks are numbered in order of their least element.
        """
        labels = [-1] * len(self.parent)
        ids = {}
        for x in range(len(self.parent)):
            root = self.find(x)
            if root not in ids:
                ids[root] = len(ids)
            labels[x] = ids[root]
        return labels, len(ids)

    def __len__(self):
        return len(self.roots())


class Budget(object):
    """Soft wall-clock budget shared by the stages of one command."""

    def __init__(self, seconds=None, clock=time.monotonic):
        self.seconds = seconds
        self.clock = clock
        self.started = clock()

    def elapsed(self):
        return self.clock() - self.started

    def check(self, stage):
        if self.seconds is not None and self.elapsed() > self.seconds:
            logger.warning('Budget of %ss exhausted in %s', self.seconds, stage)
            raise BudgetExceeded(stage, self.seconds)


def check_budget(budget, stage):
    if budget is not None:
        budget.check(stage)


def ensure_within(count, limit, what):
    if limit is not None and count > limit:
        raise LimitExceeded('%s: %d exceeds the configured limit %d' % (what, count, limit))


def check_search_budget(count, limit, stage):
    """Raises BudgetExceeded once an enumeration has produced more than `limit` items."""
    if limit is not None and count > limit:
        logger.warning('%s passed %d items (limit %d)', stage, count, limit)
        raise BudgetExceeded(stage, limit=limit)


def setting(config, name):
    """Reads `name` from an app config mapping, falling back to the defaults."""
    from orbicount import default_config
    if config is not None and name in config:
        return config[name]
    return getattr(default_config, name)
