"""Sweeps over permutation classes: the sizes of ``Av_n(B)`` and the number of
preimages of a class, total or refined by descents or peaks.
"""
import logging
from typing import List, Optional, Sequence, Tuple, Union

from stack_preimages.exceptions import CapExceededError, InvalidInputError
from stack_preimages.hooks.vhc import descent_distribution, fertility, peak_distribution
from stack_preimages.permutations.patterns import (
    PatternLike,
    av_n,
    av_n_ending_in_max,
    av_nk,
)
from stack_preimages.permutations.perm import Permutation, descents
from stack_preimages.permutations.stacksort import (
    image_multiset,
    image_statistics,
    preimages,
)
from stack_preimages.utilities import parallel_map, timed

logger = logging.getLogger(__name__)

#: The largest ``n`` a class preimage sweep may be run for.
CLASS_SWEEP_CAP = 13
#: The largest ``n`` for which a sweep may be cross-checked against the image oracle.
ORACLE_CROSS_CHECK_CAP = 8

REFINEMENTS = ("descents", "peaks")

Count = Union[int, Tuple[int, ...]]


def _fibre_size(arguments: Tuple[Permutation, Optional[str]]) -> Count:

    p, refine = arguments

    if refine is None:
        return fertility(p)
    if refine == "descents":
        return descent_distribution(p)

    return peak_distribution(p)


def _check_refine(refine: Optional[str]):

    if refine is not None and refine not in REFINEMENTS:
        raise InvalidInputError(
            f"refine must be one of {REFINEMENTS} or None, got '{refine}'."
        )


def _check_size(n: int, k: Optional[int]):

    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}.")
    if k is not None and k < 0:
        raise InvalidInputError(f"k must be non-negative, got {k}.")


def class_size(basis: Sequence[PatternLike], n: int, k: Optional[int] = None) -> int:
    """Returns ``|Av_n(basis)|``, or ``|Av_{n,k}(basis)|`` when ``k`` is given."""

    _check_size(n, k)

    return len(av_n(basis, n) if k is None else av_nk(basis, n, k))


def _oracle_class_count(
    basis: Sequence[PatternLike], n: int, refine: Optional[str], k: Optional[int]
) -> Count:

    members = set(av_n(basis, n) if k is None else av_nk(basis, n, k))

    if refine is None:
        return sum(count for image, count in image_multiset(n).items() if image in members)

    totals = [0] * max(n, 1)

    for image, counts in image_statistics(n, refine).items():

        if image not in members:
            continue

        for m, count in enumerate(counts):
            totals[m] += count

    return tuple(totals)


def class_preimage_count(
    basis: Sequence[PatternLike],
    n: int,
    refine: Optional[str] = None,
    k: Optional[int] = None,
    oracle: bool = False,
    jobs: int = 1,
) -> Count:
    """Counts the preimages of a permutation class, ``|s^{-1}(Av_n(basis))|``.

    Only the members of the class that end in ``n`` can have preimages, so only those
    are generated and their fertilities summed.

    Parameters
    ----------
    basis
        The patterns defining the class.
    n
        The length of the permutations.
    refine
        ``None`` for the total count, otherwise ``descents`` or ``peaks`` to return the
        vector whose ``m``-th entry counts the preimages with ``m`` descents (peaks).
    k
        Restricts the class to its members with exactly ``k`` descents.
    oracle
        Whether to cross-check the count against the image oracle. Only honoured for
        ``n <= ORACLE_CROSS_CHECK_CAP``.
    jobs
        The number of worker processes to spread the class over.
    """

    _check_refine(refine)
    _check_size(n, k)

    if n > CLASS_SWEEP_CAP:
        raise CapExceededError("a class preimage sweep", n, CLASS_SWEEP_CAP)

    candidates = av_n_ending_in_max(basis, n)

    if k is not None:
        candidates = [p for p in candidates if len(descents(p)) == k]

    with timed(f"preimage sweep of {len(candidates)} class members at n={n}"):
        values = parallel_map(_fibre_size, [(p, refine) for p in candidates], jobs)

    if refine is None:
        total: Count = sum(values)
    else:
        total = tuple(sum(column) for column in zip(*values)) if values else (0,) * max(n, 1)

    if oracle and n <= ORACLE_CROSS_CHECK_CAP:

        expected = _oracle_class_count(basis, n, refine, k)

        assert total == expected, (
            f"the preimage count {total} of Av_{n}({', '.join(map(str, basis))}) "
            f"disagrees with the image oracle {expected}"
        )

        logger.debug(f"class preimage count at n={n} agrees with the image oracle")

    return total


def preimage_class(basis: Sequence[PatternLike], n: int) -> List[Permutation]:
    """Returns ``s^{-1}(Av_n(basis))`` in lexicographic order."""

    return sorted(
        sigma for p in av_n_ending_in_max(basis, n) for sigma in preimages(p)
    )
