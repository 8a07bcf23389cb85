import random

import pytest

from stack_preimages.exceptions import PermutationError, UnknownIdentifierError
from stack_preimages.permutations.patterns import av_n
from stack_preimages.permutations.perm import (
    Permutation,
    all_permutations,
    ascending_runs,
    descending_runs,
    descents,
    direct_sum,
    family,
    format_permutation,
    layered,
    ltr_maxima,
    parse_permutation,
    peaks,
    reverse_complement,
    standardize,
    stats,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        pytest.param("3142", (3, 1, 4, 2), id="digit string"),
        pytest.param("3 1 4 2", (3, 1, 4, 2), id="spaces"),
        pytest.param("3,1,4,2", (3, 1, 4, 2), id="commas"),
        pytest.param(" 10 2 1 ", (10, 2, 1), id="multi-digit"),
        pytest.param("", (), id="empty"),
    ],
)
def test_parse_permutation(text, expected):
    assert parse_permutation(text) == expected


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("3 1 3", id="repeated"),
        pytest.param("3a12", id="letters"),
        pytest.param("0 1 2", id="zero"),
    ],
)
def test_parse_permutation_invalid(text):

    with pytest.raises(PermutationError):
        parse_permutation(text)


def test_format_permutation():

    p = Permutation((3, 1, 4, 2))

    assert format_permutation(p) == "3 1 4 2"
    assert str(p) == "3 1 4 2"
    assert Permutation.from_string(p.to_string()) == p


def test_is_standard():

    assert Permutation((2, 3, 1)).is_standard
    assert not Permutation((2, 5, 1)).is_standard


def test_stats():

    p = parse_permutation("3142")

    assert descents(p) == (1, 3)
    assert peaks(p) == (3,)
    assert ascending_runs(p) == ((1, 1), (2, 3), (4, 4))
    assert descending_runs(p) == ((1, 2), (3, 4))
    assert ltr_maxima(p) == (1, 3)

    assert stats(p).descents == descents(p)


def test_stats_empty():

    assert descents(()) == ()
    assert peaks(()) == ()
    assert ascending_runs(()) == ()
    assert ltr_maxima(()) == ()


def test_standardize():

    assert standardize((9, 5, 7)) == (3, 1, 2)

    with pytest.raises(PermutationError):
        standardize((1, 1))


def test_direct_sum():

    assert direct_sum(Permutation((2, 1)), Permutation((1,))) == (2, 1, 3)
    assert direct_sum(Permutation(), Permutation((1, 2))) == (1, 2)

    with pytest.raises(PermutationError):
        direct_sum(Permutation((2, 3)))


def test_reverse_complement():

    assert reverse_complement(Permutation((2, 3, 1, 4))) == (1, 4, 2, 3)
    assert reverse_complement(Permutation((3, 1, 4, 2))) == (3, 1, 4, 2)


def random_permutation(generator: random.Random, n: int) -> Permutation:

    entries = list(range(1, n + 1))
    generator.shuffle(entries)

    return Permutation(entries)


def rtl_minima(p):
    return [i for i in range(len(p)) if all(p[i] < later for later in p[i + 1:])]


@pytest.mark.parametrize("n", range(0, 8))
def test_reverse_complement_invariants(n):
    """Reverse complementing is an involution which keeps the number of descents and
    turns the right-to-left minima of ``p`` into left-to-right maxima.
    """

    for p in all_permutations(n):

        image = reverse_complement(p)

        assert reverse_complement(image) == p
        assert len(descents(image)) == len(descents(p))
        assert len(ltr_maxima(image)) == len(rtl_minima(p))


@pytest.mark.parametrize("n", range(1, 8))
def test_reverse_complement_ltr_maxima_321(n):
    """Every entry of a 321-avoider is a left-to-right maximum or a right-to-left
    minimum, so ``p`` and its reverse complement share at least ``n`` maxima.
    """

    for p in av_n(["321"], n):
        assert len(ltr_maxima(p)) + len(ltr_maxima(reverse_complement(p))) >= n, p


def test_direct_sum_associative():

    generator = random.Random(2019)
    empty = Permutation()

    for _ in range(100):

        a, b, c = [random_permutation(generator, generator.randint(0, 6)) for _ in range(3)]

        assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))
        assert direct_sum(empty, a) == a
        assert direct_sum(a, empty) == a


def test_standardize_idempotent():

    generator = random.Random(2019)

    for _ in range(100):

        word = generator.sample(range(-20, 50), generator.randint(0, 8))
        once = standardize(word)

        assert once.is_standard
        assert standardize(once) == once


@pytest.mark.parametrize(
    "name, parameters, expected",
    [
        pytest.param("identity", (3,), (1, 2, 3), id="identity"),
        pytest.param("dec", (3,), (3, 2, 1), id="dec"),
        pytest.param("sigma", (4, 3), (3, 1, 2, 4), id="sigma"),
        pytest.param("gamma", (4, 3), (2, 3, 1, 4), id="gamma"),
        pytest.param("theta", (5, 2), (3, 2, 1, 4, 5), id="theta"),
        pytest.param("delta", (1, 3, 2), (2, 3, 4, 1, 5, 6), id="delta"),
    ],
)
def test_family(name, parameters, expected):
    assert family(name, *parameters) == expected


def test_family_invalid():

    with pytest.raises(UnknownIdentifierError, match="unknown family 'tau'"):
        family("tau", 3)

    with pytest.raises(PermutationError, match="takes 2 parameters"):
        family("sigma", 3)

    with pytest.raises(PermutationError):
        family("theta", 3, 3)


def test_layered():

    assert layered((2, 1, 3)) == (2, 1, 3, 6, 5, 4)

    with pytest.raises(PermutationError):
        layered((2, 0))


def test_all_permutations():

    permutations = list(all_permutations(3))

    assert len(permutations) == 6
    assert permutations[0] == (1, 2, 3)
    assert permutations[-1] == (3, 2, 1)
    assert list(all_permutations(0)) == [()]
