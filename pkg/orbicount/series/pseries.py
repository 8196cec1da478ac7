"""
Truncated power series in one variable with exact rational coefficients.
"""
from fractions import Fraction

from orbicount.exceptions import InvalidInput, InvariantViolation


class PSeries(object):
    """c_0 + c_1 p + ... + c_N p^N, everything above p^N discarded."""

    def __init__(self, coefficients, truncation=None):
        coefficients = [Fraction(c) for c in coefficients]
        if truncation is None:
            truncation = len(coefficients) - 1
        if truncation < 0:
            raise InvalidInput('truncation must be nonnegative')
        coefficients = coefficients[:truncation + 1]
        coefficients += [Fraction(0)] * (truncation + 1 - len(coefficients))
        self.truncation = truncation
        self.coefficients = coefficients

    @classmethod
    def one(cls, truncation):
        return cls([1], truncation)

    @classmethod
    def geom_power(cls, truncation, degree, exponent, coefficient=1):
        """(1 - a p^degree)^(-exponent) for any rational exponent.

        Uses the generalised binomial series: the k-th term is
        a^k (e)(e+1)...(e+k-1)/k!.
        """
        if degree < 1:
            raise InvalidInput('monomial degree must be positive')
        exponent = Fraction(exponent)
        result = [Fraction(0)] * (truncation + 1)
        term = Fraction(1)
        k = 0
        while k * degree <= truncation:
            result[k * degree] = term
            k += 1
            term = term * (exponent + k - 1) / k * coefficient
        return cls(result, truncation)

    def _check(self, other):
        if not isinstance(other, PSeries):
            raise InvalidInput('expected a PSeries')
        return min(self.truncation, other.truncation)

    def __add__(self, other):
        n = self._check(other)
        return PSeries([self.coefficients[i] + other.coefficients[i] for i in range(n + 1)], n)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        return PSeries([c * factor for c in self.coefficients], self.truncation)

    def __mul__(self, other):
        if not isinstance(other, PSeries):
            return self.scale(other)
        n = self._check(other)
        a, b = self.coefficients, other.coefficients
        result = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    result[i + j] += a[i] * b[j]
        return PSeries(result, n)

    __rmul__ = scale

    def shift(self, degree):
        """Multiplication by p^degree."""
        return PSeries([Fraction(0)] * degree + self.coefficients, self.truncation)

    def exp(self):
        """exp of a series with zero constant term, via n e_n = Σ k s_k e_(n-k)."""
        if self.coefficients[0] != 0:
            raise InvalidInput('exp needs a zero constant term')
        s = self.coefficients
        e = [Fraction(1)] + [Fraction(0)] * self.truncation
        for n in range(1, self.truncation + 1):
            e[n] = sum((k * s[k] * e[n - k] for k in range(1, n + 1)), Fraction(0)) / n
        return PSeries(e, self.truncation)

    def log(self):
        """log of a series with constant term 1, via n l_n = n s_n - Σ k l_k s_(n-k)."""
        if self.coefficients[0] != 1:
            raise InvalidInput('log needs constant term 1')
        s = self.coefficients
        l = [Fraction(0)] * (self.truncation + 1)
        for n in range(1, self.truncation + 1):
            l[n] = (n * s[n] - sum((k * l[k] * s[n - k] for k in range(1, n)), Fraction(0))) / n
        return PSeries(l, self.truncation)

    def power(self, exponent):
        """self^exponent for a series with constant term 1."""
        return (self.log() * Fraction(exponent)).exp()

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)

    def coefficients_as_ints(self):
        if not self.is_integral():
            raise InvariantViolation('series has non-integral coefficients: %s' % self)
        return [int(c) for c in self.coefficients]

    def to_json(self):
        if self.is_integral():
            return self.coefficients_as_ints()
        return [str(c) for c in self.coefficients]

    def __eq__(self, other):
        return isinstance(other, PSeries) and self.truncation == other.truncation and \
            self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'PSeries(%s)' % ', '.join(str(c) for c in self.coefficients)


def symmetric_product_series(size, truncation):
    """Σ_k |SP^k(X)| t^k = (1 - t)^(-|X|)."""
    if size < 0:
        raise InvalidInput('set size must be nonnegative')
    return PSeries.geom_power(truncation, 1, size)


def product_of_powers(truncation, factors):
    """Π (1 - p^degree)^(-exponent) over (degree, exponent) pairs."""
    result = PSeries.one(truncation)
    for degree, exponent in factors:
        if exponent and degree <= truncation:
            result = result * PSeries.geom_power(truncation, degree, exponent)
    return result
