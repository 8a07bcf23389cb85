"""Exact truncated power series over the rationals, the generating functions of the
sequences that preimage counts are compared against, and exact real-rootedness
tests for integer polynomials based on Sturm sequences.
"""
import math
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Union

import sympy
from sympy import Poly

from stack_preimages.exceptions import SeriesError, UnknownIdentifierError

#: The default truncation order: coefficients of ``x^0`` up to ``x^32`` are kept.
DEFAULT_ORDER = 32

Scalar = Union[int, Fraction]

_X = sympy.Symbol("x")


class RationalSeries:
    """A power series ``c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`` with exact
    rational coefficients. Binary operations require both operands to share the
    same truncation order ``N``.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = (), order: int = DEFAULT_ORDER):

        if order < 0:
            raise SeriesError(f"the truncation order must be non-negative, got {order}.")

        values = [Fraction(value) for value in coefficients][: order + 1]
        values.extend(Fraction(0) for _ in range(order + 1 - len(values)))

        self._coefficients = tuple(values)

    @classmethod
    def constant(cls, value: Scalar, order: int = DEFAULT_ORDER) -> "RationalSeries":
        return cls([value], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "RationalSeries":
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> List[Fraction]:
        return list(self._coefficients)

    def __getitem__(self, power: int) -> Fraction:
        return self._coefficients[power]

    def __len__(self):
        return len(self._coefficients)

    def _coerce(self, other) -> "RationalSeries":

        if isinstance(other, RationalSeries):

            if other.order != self.order:
                raise SeriesError(
                    f"cannot combine series truncated at orders {self.order} and "
                    f"{other.order}."
                )

            return other

        if isinstance(other, (int, Fraction)):
            return RationalSeries.constant(other, self.order)

        return NotImplemented

    def __add__(self, other):

        other = self._coerce(other)

        if other is NotImplemented:
            return other

        return RationalSeries(
            (a + b for a, b in zip(self._coefficients, other._coefficients)), self.order
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries((-a for a in self._coefficients), self.order)

    def __sub__(self, other):

        other = self._coerce(other)

        if other is NotImplemented:
            return other

        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):

        if isinstance(other, (int, Fraction)):
            return RationalSeries((a * other for a in self._coefficients), self.order)

        other = self._coerce(other)

        if other is NotImplemented:
            return other

        a, b = self._coefficients, other._coefficients
        product = [Fraction(0)] * len(a)

        for i, a_i in enumerate(a):

            if a_i == 0:
                continue

            for j in range(len(a) - i):
                product[i + j] += a_i * b[j]

        return RationalSeries(product, self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):

        if isinstance(other, (int, Fraction)):

            if other == 0:
                raise SeriesError("division of a series by zero.")

            return RationalSeries((a / other for a in self._coefficients), self.order)

        other = self._coerce(other)

        if other is NotImplemented:
            return other

        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):

        if exponent < 0:
            return self.inverse() ** -exponent

        result = RationalSeries.constant(1, self.order)

        for _ in range(exponent):
            result = result * self

        return result

    def __eq__(self, other):

        if not isinstance(other, RationalSeries):
            return NotImplemented

        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):

        terms = ", ".join(str(a) for a in self._coefficients[:6])
        return f"RationalSeries([{terms}{', ...' if self.order > 5 else ''}], order={self.order})"

    def truncate(self, order: int) -> "RationalSeries":
        return RationalSeries(self._coefficients, order)

    def inverse(self) -> "RationalSeries":
        """Returns ``1 / f``, which requires a non-zero constant term."""

        a = self._coefficients

        if a[0] == 0:
            raise SeriesError("a series with zero constant term has no inverse.")

        b = [Fraction(1) / a[0]]

        for n in range(1, len(a)):
            b.append(-sum(a[k] * b[n - k] for k in range(1, n + 1)) / a[0])

        return RationalSeries(b, self.order)

    def sqrt(self) -> "RationalSeries":
        """Returns the square root ``g`` with ``g(0) = 1``, found by Newton iteration
        with the working order doubled on every step.
        """

        if self._coefficients[0] != 1:
            raise SeriesError("sqrt requires a series with constant term 1.")

        precision = 0
        root = RationalSeries.constant(1, 0)

        while precision < self.order:

            precision = min(2 * precision + 1, self.order)

            root = root.truncate(precision)
            root = (root + self.truncate(precision) / root) / 2

        return root.truncate(self.order)

    def compose(self, inner: "RationalSeries") -> "RationalSeries":
        """Returns ``self(inner(x))``, which requires ``inner(0) = 0``."""

        inner = self._coerce(inner)

        if inner[0] != 0:
            raise SeriesError("composition requires the inner series to vanish at 0.")

        result = RationalSeries.constant(self._coefficients[-1], self.order)

        for coefficient in reversed(self._coefficients[:-1]):
            result = result * inner + coefficient

        return result

    def derivative(self) -> "RationalSeries":
        """Returns ``f'``. The coefficient of ``x^N`` in the result is unknown at this
        truncation order and is left as zero.
        """
        return RationalSeries(
            (k * a for k, a in enumerate(self._coefficients) if k > 0), self.order
        )

    def shift(self, power: int) -> "RationalSeries":
        """Multiplies by ``x^power``. A negative ``power`` divides by ``x^{-power}``,
        which requires the dropped low order coefficients to vanish.
        """

        if power >= 0:
            return RationalSeries([0] * power + list(self._coefficients), self.order)

        dropped = self._coefficients[:-power]

        if any(a != 0 for a in dropped):
            raise SeriesError(
                f"the series is not divisible by x^{-power}: its low order "
                f"coefficients are {list(dropped)}."
            )

        return RationalSeries(self._coefficients[-power:], self.order)


def _catalan(order: int) -> RationalSeries:
    """``(1 - sqrt(1 - 4x)) / (2x)``"""

    x = RationalSeries.x(order + 1)
    numerator = 1 - (1 - 4 * x).sqrt()

    return (numerator / 2).shift(-1).truncate(order)


def _schroeder(order: int) -> RationalSeries:
    """``(1 - x - sqrt(1 - 6x + x^2)) / 2``"""

    x = RationalSeries.x(order)
    return (1 - x - (1 - 6 * x + x * x).sqrt()) / 2


def _fine(order: int) -> RationalSeries:
    """``(1 / x) (1 - sqrt(1 - 4x)) / (3 - sqrt(1 - 4x))``"""

    x = RationalSeries.x(order + 1)
    root = (1 - 4 * x).sqrt()

    return ((1 - root) / (3 - root)).shift(-1).truncate(order)


def _conj2(order: int) -> RationalSeries:
    """``(1 - 2x - sqrt(1 - 4x - 4x^2)) / (4x)``"""

    x = RationalSeries.x(order + 1)
    numerator = 1 - 2 * x - (1 - 4 * x - 4 * x * x).sqrt()

    return (numerator / 4).shift(-1).truncate(order)


def _conj5(order: int) -> RationalSeries:
    """``1 / (1 - x C(x C(x)))``"""

    x = RationalSeries.x(order)
    catalan = _catalan(order)

    return (1 - x * catalan.compose(x * catalan)).inverse()


def _av132_321(order: int) -> RationalSeries:
    """``C(x) - 1 + x^3 C'(x)^2``"""

    x = RationalSeries.x(order + 1)
    catalan = _catalan(order + 1)

    return (catalan - 1 + x ** 3 * catalan.derivative() ** 2).truncate(order)


GENERATING_FUNCTIONS: Dict[str, Callable[[int], RationalSeries]] = {
    "catalan": _catalan,
    "schroeder": _schroeder,
    "fine": _fine,
    "conj2": _conj2,
    "conj5": _conj5,
    "av132_321": _av132_321,
}


def gf_series(name: str, order: int = DEFAULT_ORDER) -> RationalSeries:

    if name not in GENERATING_FUNCTIONS:
        raise UnknownIdentifierError("series", name, GENERATING_FUNCTIONS)

    return GENERATING_FUNCTIONS[name](order)


def gf_coefficients(name: str, order: int = DEFAULT_ORDER) -> List[int]:
    """Returns the coefficients of ``x^0, ..., x^order`` of a named generating
    function as exact integers.
    """

    coefficients = gf_series(name, order).coefficients

    if any(c.denominator != 1 for c in coefficients):
        raise SeriesError(f"the {name} generating function has non-integral coefficients.")

    return [c.numerator for c in coefficients]


def series_sqrt(f: RationalSeries) -> RationalSeries:
    return f.sqrt()


def series_compose(g: RationalSeries, f: RationalSeries) -> RationalSeries:
    return g.compose(f)


class IntPolynomial:
    """A polynomial with integer coefficients, stored in ascending order of powers
    and backed by an exact ``sympy.Poly`` over ``ZZ``.
    """

    def __init__(self, coefficients: Sequence[int]):

        values = [int(c) for c in coefficients]

        while len(values) > 0 and values[-1] == 0:
            values.pop()

        self._coefficients = tuple(values)
        self._poly = Poly(list(reversed(values)) or [0], _X, domain=sympy.ZZ)

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        return cls(reversed([int(c) for c in poly.all_coeffs()]))

    @property
    def coefficients(self) -> List[int]:
        return list(self._coefficients)

    @property
    def poly(self) -> Poly:
        return self._poly

    @property
    def degree(self) -> int:
        """The degree, with ``-1`` for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return len(self._coefficients) == 0

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self._poly * other._poly)

    def __eq__(self, other):

        if not isinstance(other, IntPolynomial):
            return NotImplemented

        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return f"IntPolynomial({list(self._coefficients)})"


def _primitive(poly: Poly) -> Poly:

    content = math.gcd(*(int(c) for c in poly.all_coeffs()))
    return poly if content in (0, 1) else poly.exquo_ground(content)


def sturm_sequence(p: IntPolynomial) -> List[Poly]:
    """Returns the Sturm sequence of ``p`` computed with signed pseudo-remainders.
    Each member is reduced to its primitive part, which leaves every sign unchanged.
    """

    if p.is_zero:
        raise SeriesError("the zero polynomial has no Sturm sequence.")

    sequence = [_primitive(p.poly)]

    if p.degree == 0:
        return sequence

    sequence.append(_primitive(p.poly.diff(_X)))

    while not sequence[-1].is_zero and sequence[-1].degree() > 0:

        previous, current = sequence[-2], sequence[-1]
        remainder = previous.prem(current)

        if remainder.is_zero:
            break

        # prem multiplies by lc(current)^(deg previous - deg current + 1).
        exponent = previous.degree() - current.degree() + 1
        flip = current.LC() < 0 and exponent % 2 == 1

        sequence.append(_primitive(remainder if flip else -remainder))

    return sequence


def _sign_changes(signs: Iterable[int]) -> int:

    nonzero = [sign for sign in signs if sign != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def count_distinct_real_roots(p: IntPolynomial) -> int:
    """Counts the distinct real roots of ``p`` as ``V(-inf) - V(+inf)``."""

    sequence = sturm_sequence(p)

    at_plus_infinity = [1 if q.LC() > 0 else -1 for q in sequence]
    at_minus_infinity = [
        sign * (-1 if q.degree() % 2 == 1 else 1)
        for sign, q in zip(at_plus_infinity, sequence)
    ]

    return _sign_changes(at_minus_infinity) - _sign_changes(at_plus_infinity)


def count_real_roots(p: IntPolynomial) -> int:
    """Counts the real roots of ``p`` with multiplicity. The roots of
    ``gcd(p, p')`` are the repeated roots of ``p`` with one fewer multiplicity each,
    so recursing on it accounts for all multiplicities.
    """

    if p.is_zero:
        raise SeriesError("the zero polynomial has infinitely many roots.")
    if p.degree == 0:
        return 0

    repeated = IntPolynomial.from_poly(sympy.gcd(p.poly, p.poly.diff(_X)))

    return count_distinct_real_roots(p) + count_real_roots(repeated)


def is_real_rooted(p: Union[IntPolynomial, Sequence[int]]) -> bool:
    """Returns whether every complex root of ``p`` is real."""

    if not isinstance(p, IntPolynomial):
        p = IntPolynomial(p)

    if p.is_zero:
        raise SeriesError("real-rootedness is undefined for the zero polynomial.")

    return count_real_roots(p) == p.degree


def is_log_concave(a: Sequence[int]) -> bool:
    return all(a[j] * a[j] >= a[j - 1] * a[j + 1] for j in range(1, len(a) - 1))


def is_unimodal(a: Sequence[int]) -> bool:

    j = 0

    while j + 1 < len(a) and a[j] <= a[j + 1]:
        j += 1
    while j + 1 < len(a) and a[j] >= a[j + 1]:
        j += 1

    return j >= len(a) - 1
