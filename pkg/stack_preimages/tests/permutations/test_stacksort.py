import numpy
import pytest

from stack_preimages.exceptions import (
    CapExceededError,
    InvalidInputError,
    PermutationError,
)
from stack_preimages.permutations.perm import Permutation, all_permutations
from stack_preimages.permutations.stacksort import (
    PushPopWord,
    fertility_by_filter,
    image_multiset,
    image_statistics,
    is_pushpop_word,
    is_t_sortable,
    preimages,
    pushpop_word,
    sort_iter,
    sort_once,
    sort_recursive,
    statistic_counts,
)


def test_sort_once():

    assert sort_once((3, 1, 4, 2)) == (1, 3, 2, 4)
    assert sort_once(()) == ()
    assert sort_once((2, 3, 1)) == (2, 1, 3)


@pytest.mark.parametrize("n", range(0, 7))
def test_sort_recursive(n):
    """The stack and the ``s(LnR) = s(L) s(R) n`` recursion define the same map."""

    for p in all_permutations(n):
        assert sort_once(p) == sort_recursive(p)


def test_sort_iter():

    assert sort_iter((2, 3, 1), 0) == (2, 3, 1)
    assert sort_iter((2, 3, 1), 2) == (1, 2, 3)

    with pytest.raises(InvalidInputError):
        sort_iter((1,), -1)


@pytest.mark.parametrize("n", range(1, 8))
def test_n_minus_one_passes_sort(n):

    identity = tuple(range(1, n + 1))
    assert all(sort_iter(p, n - 1) == identity for p in all_permutations(n))


def test_is_t_sortable():

    assert not is_t_sortable((2, 3, 1), 1)
    assert is_t_sortable((2, 3, 1), 2)
    assert is_t_sortable((3, 1, 2), 1)


def test_pushpop_word():

    word = pushpop_word((3, 1, 4, 2))

    assert word == "AABBAABB"
    assert isinstance(word, PushPopWord)


@pytest.mark.parametrize(
    "word, expected",
    [
        pytest.param("", True, id="empty"),
        pytest.param("AABB", True, id="nested"),
        pytest.param("ABAB", True, id="flat"),
        pytest.param("BA", False, id="pop first"),
        pytest.param("AAB", False, id="unbalanced"),
        pytest.param("AXB", False, id="foreign letter"),
    ],
)
def test_is_pushpop_word(word, expected):
    assert is_pushpop_word(word) is expected


def test_pushpop_word_invalid():

    with pytest.raises(PermutationError):
        PushPopWord("BA")


@pytest.mark.parametrize(
    "p, expected",
    [
        pytest.param((1, 3, 2, 4), [(1, 3, 4, 2), (3, 1, 4, 2)], id="1324"),
        pytest.param(
            (1, 2, 3),
            [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2), (3, 2, 1)],
            id="identity",
        ),
        pytest.param((2, 1), [], id="sterile"),
        pytest.param((), [()], id="empty"),
    ],
)
def test_preimages(p, expected):

    fibre = preimages(p)

    assert fibre == expected
    assert all(isinstance(sigma, Permutation) for sigma in fibre)
    assert all(sort_once(sigma) == tuple(p) for sigma in fibre)


def test_preimages_cap():

    with pytest.raises(CapExceededError):
        preimages(tuple(range(1, 10)))


@pytest.mark.parametrize("jobs", [1, 2])
def test_image_multiset(jobs):

    images = image_multiset(4, jobs)

    assert sum(images.values()) == 24
    assert images[(1, 2, 3, 4)] == 14
    assert images[(1, 3, 2, 4)] == 2
    assert images[(1, 3, 4, 2)] == 0

    assert all(images[p] == len(preimages(p)) for p in images)


def test_image_multiset_cap():

    with pytest.raises(CapExceededError):
        image_multiset(11)


def test_statistic_counts():

    permutations = numpy.array([[1, 2, 3], [3, 1, 2], [1, 3, 2], [3, 2, 1]])

    assert statistic_counts(permutations, "descents").tolist() == [0, 1, 1, 2]
    assert statistic_counts(permutations, "peaks").tolist() == [0, 0, 1, 0]

    with pytest.raises(ValueError):
        statistic_counts(permutations, "runs")


def test_image_statistics():

    descents = image_statistics(3, "descents")
    peaks = image_statistics(3, "peaks")

    assert descents[(1, 2, 3)] == (1, 3, 1)
    assert peaks[(1, 2, 3)] == (4, 1, 0)

    assert image_statistics(0, "peaks") == {(): (1,)}


def test_fertility_by_filter():

    assert fertility_by_filter((1, 3, 2, 4)) == 2
    assert fertility_by_filter((3, 1, 4, 2)) == 0
