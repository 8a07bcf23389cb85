import random
from fractions import Fraction

import pytest
import sympy

from stack_preimages.enumeration.numbers import catalan, eq12_total, fine
from stack_preimages.enumeration.series import (
    IntPolynomial,
    RationalSeries,
    count_distinct_real_roots,
    count_real_roots,
    gf_coefficients,
    gf_series,
    is_log_concave,
    is_real_rooted,
    is_unimodal,
    series_compose,
    series_sqrt,
    sturm_sequence,
)
from stack_preimages.exceptions import SeriesError, UnknownIdentifierError


def test_arithmetic():

    x = RationalSeries.x(5)

    assert ((1 - x) * (1 - x).inverse()) == RationalSeries.constant(1, 5)
    assert ((1 + x) ** 2).coefficients == [1, 2, 1, 0, 0, 0]
    assert (1 / (1 - x)).coefficients == [1] * 6
    assert (x / 2)[1] == Fraction(1, 2)
    assert (1 - x) ** -1 == (1 - x).inverse()


def random_series(
    generator: random.Random, order: int, constant=None
) -> RationalSeries:

    coefficients = [
        Fraction(generator.randint(-9, 9), generator.randint(1, 5)) for _ in range(order + 1)
    ]

    if constant is not None:
        coefficients[0] = Fraction(constant)

    return RationalSeries(coefficients, order)


def test_ring_laws():

    generator = random.Random(31)

    for _ in range(50):

        f, g, h = [random_series(generator, 6) for _ in range(3)]

        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f
        assert (f + g) - g == f


def test_order_mismatch():

    with pytest.raises(SeriesError, match="orders 3 and 4"):
        RationalSeries.x(3) + RationalSeries.x(4)


def test_inverse_requires_constant_term():

    with pytest.raises(SeriesError):
        RationalSeries.x(4).inverse()


def test_sqrt():

    x = RationalSeries.x(8)

    assert series_sqrt((1 + x) ** 2) == 1 + x
    assert series_sqrt(1 - 4 * x) ** 2 == 1 - 4 * x

    with pytest.raises(SeriesError):
        series_sqrt(2 + x)


def test_sqrt_squares_back():

    generator = random.Random(32)

    for _ in range(200):

        f = random_series(generator, 8, constant=1)
        assert series_sqrt(f) ** 2 == f


def test_compose():

    x = RationalSeries.x(6)
    geometric = (1 - x).inverse()

    # 1 / (1 - 2x)
    assert series_compose(geometric, 2 * x).coefficients == [2 ** n for n in range(7)]

    with pytest.raises(SeriesError):
        series_compose(geometric, 1 + x)


def test_derivative_and_shift():

    x = RationalSeries.x(4)
    f = 1 + 2 * x + 3 * x ** 3

    assert f.derivative().coefficients == [2, 0, 9, 0, 0]
    assert f.shift(1).coefficients == [0, 1, 2, 0, 3]
    assert (f - 1).shift(-1).coefficients == [2, 0, 3, 0, 0]

    with pytest.raises(SeriesError, match="not divisible"):
        f.shift(-1)


@pytest.mark.parametrize(
    "name, expected",
    [
        pytest.param("catalan", [catalan(n) for n in range(10)], id="catalan"),
        pytest.param("fine", [fine(n) for n in range(10)], id="fine"),
        pytest.param("schroeder", [0, 1, 2, 6, 22, 90, 394], id="schroeder"),
        pytest.param("conj2", [0, 1, 2, 6], id="conj2"),
        pytest.param(
            "av132_321", [0] + [eq12_total(n) for n in range(1, 9)], id="av132_321"
        ),
    ],
)
def test_gf_coefficients(name, expected):
    assert gf_coefficients(name, len(expected) - 1) == expected


def test_conj5_coefficients():

    coefficients = gf_coefficients("conj5", 3)

    assert coefficients[0] == 1
    assert coefficients[3] == 6


def test_gf_series_unknown():

    with pytest.raises(UnknownIdentifierError, match="unknown series 'motzkin'"):
        gf_series("motzkin")


def test_int_polynomial():

    p = IntPolynomial([1, 1, 0, 0])

    assert p.coefficients == [1, 1]
    assert p.degree == 1
    assert IntPolynomial([]).degree == -1
    assert (p * p).coefficients == [1, 2, 1]


@pytest.mark.parametrize(
    "coefficients, distinct, total, real_rooted",
    [
        pytest.param([1, 3, 1], 2, 2, True, id="x^2+3x+1"),
        pytest.param([1, 1, 1], 0, 0, False, id="x^2+x+1"),
        pytest.param([1, 2, 1], 1, 2, True, id="double root"),
        pytest.param([0, 0, 1], 1, 2, True, id="x^2"),
        pytest.param([-1, 0, 0, 1], 1, 1, False, id="x^3-1"),
        pytest.param([6, 11, 6, 1], 3, 3, True, id="(x+1)(x+2)(x+3)"),
        pytest.param([5], 0, 0, True, id="constant"),
    ],
)
def test_real_roots(coefficients, distinct, total, real_rooted):

    p = IntPolynomial(coefficients)

    assert count_distinct_real_roots(p) == distinct
    assert count_real_roots(p) == total
    assert is_real_rooted(coefficients) is real_rooted


def random_polynomial(generator: random.Random) -> IntPolynomial:

    degree = generator.randint(1, 4)
    leading = generator.choice([-3, -2, -1, 1, 2, 3])

    return IntPolynomial([generator.randint(-5, 5) for _ in range(degree)] + [leading])


def test_real_root_count_is_additive():
    """The real roots of ``p q`` are those of ``p`` together with those of ``q``."""

    generator = random.Random(33)
    tested = 0

    while tested < 100:

        p, q = random_polynomial(generator), random_polynomial(generator)

        if sympy.gcd(p.poly, q.poly).degree() > 0:
            continue

        expected = count_real_roots(p) + count_real_roots(q)
        assert count_real_roots(p * q) == expected, (p, q)
        tested += 1


def test_zero_polynomial():

    with pytest.raises(SeriesError):
        sturm_sequence(IntPolynomial([0]))
    with pytest.raises(SeriesError):
        is_real_rooted([])


def test_unimodal_and_log_concave():

    assert is_unimodal([1, 2, 6, 10, 13, 10, 3])
    assert is_unimodal([])
    assert not is_unimodal([1, 3, 2, 4])

    assert is_log_concave([1, 4, 1])
    assert not is_log_concave([1, 1, 4])
