"""The stack-sorting map ``s``, its iterates, the push / pop word of a run of the
stack, and exhaustive preimage oracles.

The stack is kept decreasing from bottom to top: the next entry is pushed while it
is smaller than the entry on top of the stack, otherwise the top is popped to the
output. This gives ``s(3142) = 1324`` and agrees with the recursion
``s(LnR) = s(L) s(R) n``.
"""
import functools
import itertools
import logging
from collections import Counter
from typing import Dict, List, Sequence, Tuple

import numpy

from stack_preimages.exceptions import (
    CapExceededError,
    InvalidInputError,
    PermutationError,
)
from stack_preimages.permutations.perm import Permutation, all_permutations
from stack_preimages.utilities import parallel_map, timed

logger = logging.getLogger(__name__)

#: The largest ``n`` for which the whole of ``S_n`` may be bucketed by image.
ORACLE_CAP = 10
#: The largest ``n`` for which a fibre ``s^{-1}(p)`` may be listed.
PREIMAGE_CAP = 8

PUSH = "A"
POP = "B"

STATISTICS = ("descents", "peaks")


class PushPopWord(str):
    """A balanced word over ``{A, B}`` recording the pushes (``A``) and pops (``B``)
    performed while stack-sorting a permutation.
    """

    def __new__(cls, letters: str = ""):

        if not is_pushpop_word(letters):
            raise PermutationError(f"'{letters}' is not a balanced push / pop word.")

        return super(PushPopWord, cls).__new__(cls, letters)


def is_pushpop_word(word: str) -> bool:
    """Returns whether every prefix of ``word`` has at least as many pushes as pops
    and the word as a whole is balanced.
    """

    height = 0

    for letter in word:

        if letter == PUSH:
            height += 1
        elif letter == POP:
            height -= 1
        else:
            return False

        if height < 0:
            return False

    return height == 0


def _run_stack(p: Sequence[int]) -> Tuple[Tuple[int, ...], str]:

    output: List[int] = []
    letters: List[str] = []
    stack: List[int] = []

    for value in p:

        while len(stack) > 0 and stack[-1] < value:
            output.append(stack.pop())
            letters.append(POP)

        stack.append(value)
        letters.append(PUSH)

    while len(stack) > 0:
        output.append(stack.pop())
        letters.append(POP)

    return tuple(output), "".join(letters)


def sort_once(p: Sequence[int]) -> Permutation:
    """Returns ``s(p)``, the output of a single pass of ``p`` through a stack."""
    return Permutation(_run_stack(p)[0])


def sort_recursive(p: Sequence[int]) -> Permutation:
    """Returns ``s(p)`` computed from the recursion ``s(LnR) = s(L) s(R) n``."""

    if len(p) == 0:
        return Permutation()

    largest = max(p)
    split = list(p).index(largest)

    return Permutation(
        sort_recursive(p[:split]) + sort_recursive(p[split + 1:]) + (largest,)
    )


def sort_iter(p: Sequence[int], t: int) -> Permutation:
    """Returns ``s^t(p)``; ``t = 0`` returns ``p`` itself."""

    if t < 0:
        raise InvalidInputError(f"t must be non-negative, got {t}.")

    image = Permutation(p)

    for _ in range(t):
        image = sort_once(image)

    return image


def is_t_sortable(p: Sequence[int], t: int) -> bool:
    return tuple(sort_iter(p, t)) == tuple(sorted(p))


def pushpop_word(p: Sequence[int]) -> PushPopWord:
    """Returns the word obtained by writing ``A`` for every push and ``B`` for every
    pop while stack-sorting ``p``, e.g. ``3142 -> AABBAABB``.
    """
    return PushPopWord(_run_stack(p)[1])


@functools.lru_cache(maxsize=4096)
def _preimages(word: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:

    if len(word) == 0:
        return ((),)

    largest = word[-1]

    if largest != max(word):
        return ()

    remainder = word[:-1]
    fibre = []

    for split in range(len(remainder) + 1):

        left = _preimages(remainder[:split])

        if len(left) == 0:
            continue

        right = _preimages(remainder[split:])

        fibre.extend(
            lower + (largest,) + upper for lower, upper in itertools.product(left, right)
        )

    return tuple(fibre)


def preimages(p: Sequence[int]) -> List[Permutation]:
    """Returns the fibre ``s^{-1}(p)`` in lexicographic order.

    The fibre is built by inverting ``s(LnR) = s(L) s(R) n`` over every split of
    ``p`` minus its last entry, so it never scans ``S_n``.
    """

    if len(p) > PREIMAGE_CAP:
        raise CapExceededError("listing a fibre", len(p), PREIMAGE_CAP)

    return sorted(Permutation(sigma) for sigma in _preimages(tuple(p)))


def _check_oracle_cap(n: int):

    if n > ORACLE_CAP:
        raise CapExceededError("the image oracle", n, ORACLE_CAP)


def _images_with_first_entry(arguments: Tuple[int, int]) -> Counter:

    n, first = arguments
    rest = [value for value in range(1, n + 1) if value != first]

    return Counter(
        _run_stack((first,) + tail)[0] for tail in itertools.permutations(rest)
    )


def image_multiset(n: int, jobs: int = 1) -> Counter:
    """Buckets every element of ``S_n`` by its image under ``s``, returning the number
    of preimages of each ``p`` in ``S_n``. Only permutations with at least one
    preimage are stored; looking up any other ``p`` gives 0.

    Parameters
    ----------
    n
        The length of the permutations.
    jobs
        The number of worker processes to partition ``S_n`` over (by first entry).
    """

    _check_oracle_cap(n)

    with timed(f"image multiset of S_{n}"):

        if n == 0:
            return Counter({Permutation(): 1})

        counts: Counter = Counter()

        for partial in parallel_map(
            _images_with_first_entry, [(n, first) for first in range(1, n + 1)], jobs
        ):
            counts.update(partial)

    return Counter(
        {Permutation(image): count for image, count in sorted(counts.items())}
    )


def _permutation_array(n: int) -> numpy.ndarray:
    return numpy.array(list(itertools.permutations(range(1, n + 1))), dtype=int).reshape(
        -1, n
    )


def statistic_counts(permutations: numpy.ndarray, statistic: str) -> numpy.ndarray:
    """Counts the descents or peaks of every row of an ``(N, n)`` array of
    permutations.
    """

    if statistic == "descents":
        return (permutations[:, :-1] > permutations[:, 1:]).sum(axis=1)

    if statistic == "peaks":

        middle = permutations[:, 1:-1]

        return (
            (middle > permutations[:, :-2]) & (middle > permutations[:, 2:])
        ).sum(axis=1)

    raise InvalidInputError(
        f"statistic must be one of {STATISTICS}, got '{statistic}'."
    )


def image_statistics(n: int, statistic: str) -> Dict[Permutation, Tuple[int, ...]]:
    """Buckets every element of ``S_n`` by its image under ``s`` and by its number
    of descents (or peaks).

    Returns
    -------
        A map from each image ``p`` to the vector whose ``m``-th entry is the number
        of preimages of ``p`` with exactly ``m`` descents (or peaks), for
        ``0 <= m <= max(n - 1, 0)``.
    """

    _check_oracle_cap(n)

    if n == 0:
        return {Permutation(): (1,)}

    permutations = _permutation_array(n)
    values = statistic_counts(permutations, statistic)

    width = max(n, 1)
    buckets: Dict[Tuple[int, ...], List[int]] = {}

    with timed(f"{statistic} bucketed image oracle of S_{n}"):

        for row, value in zip(permutations.tolist(), values.tolist()):

            image = _run_stack(row)[0]
            buckets.setdefault(image, [0] * width)[value] += 1

    return {Permutation(image): tuple(counts) for image, counts in sorted(buckets.items())}


def fertility_by_filter(p: Sequence[int]) -> int:
    """Counts ``s^{-1}(p)`` by sorting every element of ``S_n``. Only intended as a
    cross-check of the other oracles at small ``n``.
    """

    _check_oracle_cap(len(p))

    target = tuple(p)
    return sum(1 for sigma in all_permutations(len(p)) if tuple(sort_once(sigma)) == target)
