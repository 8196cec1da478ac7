"""
Series in p, q and y with exact coefficients, and the product/exponential
pair built from a table of integers c(m, k).

A PQYSeries keeps every monomial p^i q^m y^k with i <= P, m <= Q and
|k| <= Y in a dense object array indexed [i, m, k + Y]. Products drop
monomials outside the window, so computations that still multiply run on a
y window wide enough to hold every exponent that can reach degree P and are
cut down to the requested window at the end.
"""
import logging
from fractions import Fraction

import numpy as np

from orbicount.exceptions import InvalidInput, InvariantViolation, ParserError
from orbicount.parser import Parser
from orbicount.series.pseries import PSeries
from orbicount.utils import divisors

logger = logging.getLogger(__name__)


class CoeffTable(object):
    """Integers c(m, k) for 0 <= m <= m_max and |k| <= k_abs, zero elsewhere in the window."""

    def __init__(self, m_max, k_abs, entries=None):
        if m_max < 0 or k_abs < 0:
            raise InvalidInput('coefficient window must be nonnegative')
        self.m_max = m_max
        self.k_abs = k_abs
        self.entries = {}
        for (m, k), c in (entries or {}).items():
            if not (0 <= m <= m_max and -k_abs <= k <= k_abs):
                raise InvalidInput('entry (%d, %d) lies outside the window m <= %d, |k| <= %d'
                                   % (m, k, m_max, k_abs))
            if c:
                self.entries[(m, k)] = int(c)

    @classmethod
    def random(cls, seed, m_max, k_abs, c_range=(-3, 3)):
        rng = np.random.default_rng(seed)
        values = rng.integers(c_range[0], c_range[1] + 1, size=(m_max + 1, 2 * k_abs + 1))
        return cls(m_max, k_abs, {(m, k - k_abs): int(values[m, k])
                                  for m in range(m_max + 1) for k in range(2 * k_abs + 1)})

    def get(self, m, k):
        if m > self.m_max or abs(k) > self.k_abs:
            raise InvalidInput('c(%d, %d) requested outside the supplied window m <= %d, |k| <= %d'
                               % (m, k, self.m_max, self.k_abs))
        return self.entries.get((m, k), 0)

    def require(self, m_needed):
        if self.m_max < m_needed:
            raise InvalidInput('coefficient window m_max = %d is too small, at least %d is needed'
                               % (self.m_max, m_needed))

    def to_json(self):
        return {'window': {'m_max': self.m_max, 'k_abs': self.k_abs},
                'entries': [[m, k, c] for (m, k), c in sorted(self.entries.items())]}


def load_coeff_table(spec, path=''):
    window = Parser.dict(spec, 'window', path)
    window_path = Parser.location(path, 'window')
    m_max = Parser.int(window, 'm_max', window_path, min=0)
    k_abs = Parser.int(window, 'k_abs', window_path, min=0)
    location = Parser.location(path, 'entries')
    entries = {}
    for i, entry in enumerate(Parser.list(spec, 'entries', path)):
        where = '%s[%d]' % (location, i)
        values = Parser.int_list(entry, where)
        if len(values) != 3:
            raise ParserError(where, 'must be [m, k, c]')
        m, k, c = values
        if not (0 <= m <= m_max and -k_abs <= k <= k_abs):
            raise ParserError(where, 'lies outside the declared window')
        entries[(m, k)] = entries.get((m, k), 0) + c
    return CoeffTable(m_max, k_abs, entries)


def _zeros(shape):
    data = np.empty(shape, dtype=object)
    data.fill(0)
    return data


def _divide(data, n):
    return np.frompyfunc(lambda x: Fraction(x, n), 1, 1)(data)


def _shifted(width, s):
    """(target, source) slices along a y axis of the given width for a shift by s."""
    return slice(max(0, s), width + min(0, s)), slice(max(0, -s), width - max(0, s))


def slice_mul(a, b):
    """Product of two (q, y) slices of the same shape, truncated to that shape."""
    q_len, width = a.shape
    y = (width - 1) // 2
    out = _zeros(a.shape)
    for m, k in zip(*np.nonzero(a != 0)):
        target, source = _shifted(width, int(k) - y)
        out[m:, target] += a[m, k] * b[:q_len - m, source]
    return out


class PQYSeries(object):

    def __init__(self, P, Q, Y, data=None):
        self.P, self.Q, self.Y = P, Q, Y
        shape = (P + 1, Q + 1, 2 * Y + 1)
        if data is None:
            data = _zeros(shape)
        elif data.shape != shape:
            raise InvalidInput('coefficient array has shape %r, expected %r' % (data.shape, shape))
        self.data = data

    @classmethod
    def one(cls, P, Q, Y):
        series = cls(P, Q, Y)
        series.data[0, 0, Y] = 1
        return series

    def coefficient(self, i, m, k):
        if i > self.P or m > self.Q or abs(k) > self.Y:
            raise InvalidInput('monomial p^%d q^%d y^%d is outside the window' % (i, m, k))
        return self.data[i, m, k + self.Y]

    def window(self, Y):
        if Y > self.Y:
            raise InvalidInput('cannot widen a y window from %d to %d' % (self.Y, Y))
        return PQYSeries(self.P, self.Q, Y, self.data[:, :, self.Y - Y:self.Y + Y + 1].copy())

    def __mul__(self, other):
        if (self.P, self.Q, self.Y) != (other.P, other.Q, other.Y):
            raise InvalidInput('series windows differ')
        out = PQYSeries(self.P, self.Q, self.Y)
        for i in range(self.P + 1):
            if not np.any(self.data[i] != 0):
                continue
            for j in range(self.P + 1 - i):
                out.data[i + j] += slice_mul(self.data[i], other.data[j])
        return out

    def geom_factor(self, n, m, k, exponent):
        """Multiplies in place by (1 - p^n q^m y^k)^(-exponent), exponent an integer."""
        if n < 1:
            raise InvalidInput('p exponent must be positive')
        if m > self.Q:
            return self
        target, source = _shifted(2 * self.Y + 1, k)
        data = self.data
        for _ in range(abs(exponent)):
            if exponent > 0:
                for i in range(n, self.P + 1):
                    data[i, m:, target] += data[i - n, :self.Q + 1 - m, source]
            else:
                for i in range(self.P, n - 1, -1):
                    data[i, m:, target] -= data[i - n, :self.Q + 1 - m, source]
        return self

    def is_integral(self):
        return all(Fraction(x).denominator == 1 for x in self.data.flat)

    def p_series(self, m=0, k=0):
        return PSeries([self.coefficient(i, m, k) for i in range(self.P + 1)], self.P)

    def nonzero_terms(self):
        """[(i, m, k, coefficient)] in index order."""
        return [(int(i), int(m), int(k) - self.Y, self.data[i, m, k])
                for i, m, k in zip(*np.nonzero(self.data != 0))]

    def to_json(self):
        return [[i, m, k, int(c) if Fraction(c).denominator == 1 else str(Fraction(c))]
                for i, m, k, c in self.nonzero_terms()]

    def __eq__(self, other):
        return isinstance(other, PQYSeries) and \
            (self.P, self.Q, self.Y) == (other.P, other.Q, other.Y) and \
            bool(np.all(self.data == other.data))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<PQYSeries P=%d Q=%d Y=%d, %d terms>' % (self.P, self.Q, self.Y, len(self.nonzero_terms()))


def _working_window(c, P, Y):
    return max(Y, c.k_abs * P)


def jacobi_hecke(c, r, Q, Y):
    """T(r) applied to Σ c(m, k) q^m y^k: Σ_{ad=r} (1/a) Σ c(md, k) q^(am) y^(ak).

    Returns the (q, y) coefficients as a PQYSeries with P = 0.
    """
    if r < 1:
        raise InvalidInput('Hecke index must be positive')
    c.require(Q * r)
    result = PQYSeries(0, Q, Y)
    data = result.data[0]
    for a in divisors(r):
        d = r // a
        for m in range(Q // a + 1):
            for k in range(-c.k_abs, c.k_abs + 1):
                value = c.get(m * d, k)
                if value and abs(a * k) <= Y:
                    data[a * m, a * k + Y] += Fraction(value, a)
    return result


def dmvv_product(c, P, Q, Y):
    """Π_{n>=1, m>=0, k} (1 - p^n q^m y^k)^(-c(mn, k)) through p^P, q^Q, |y| <= Y."""
    c.require(P * Q)
    working = _working_window(c, P, Y)
    series = PQYSeries.one(P, Q, working)
    for n in range(1, P + 1):
        for m in range(Q + 1):
            for k in range(-c.k_abs, c.k_abs + 1):
                exponent = c.get(m * n, k)
                if exponent:
                    series.geom_factor(n, m, k, exponent)
    return series.window(Y)


def dmvv_exp(c, P, Q, Y):
    """exp(Σ_{r=1..P} p^r T(r)c) through p^P, q^Q, |y| <= Y; integral for integral c."""
    c.require(P * Q)
    working = _working_window(c, P, Y)
    slices = [None] + [jacobi_hecke(c, r, Q, working).data[0] for r in range(1, P + 1)]
    series = PQYSeries.one(P, Q, working)
    data = series.data
    for n in range(1, P + 1):
        total = _zeros(data[0].shape)
        for j in range(1, n + 1):
            total += j * slice_mul(slices[j], data[n - j])
        data[n] = _divide(total, n)
    result = series.window(Y)
    for index, value in np.ndenumerate(result.data):
        value = Fraction(value)
        if value.denominator != 1:
            raise InvariantViolation('exponential form has non-integral coefficient %s at %r'
                                     % (value, index))
        result.data[index] = int(value)
    logger.debug('Exponential form through p^%d q^%d y^%d', P, Q, Y)
    return result
