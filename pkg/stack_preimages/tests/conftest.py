import random
from typing import List

import pytest

from stack_preimages.permutations.perm import Permutation, parse_permutation


@pytest.fixture()
def hooked_permutation() -> Permutation:
    """A permutation with two descents whose canonical hooks end on the points
    ``(3, 4)`` and ``(5, 5)``.
    """
    return parse_permutation("3142567")


@pytest.fixture()
def sterile_permutation() -> Permutation:
    """A permutation with no preimages under the stack-sorting map."""
    return parse_permutation("3412")


@pytest.fixture()
def random_permutations() -> List[Permutation]:
    """A reproducible sample of permutations of lengths 1 to 8."""

    generator = random.Random(2019)
    sample = []

    for _ in range(40):

        n = generator.randint(1, 8)
        entries = list(range(1, n + 1))
        generator.shuffle(entries)

        sample.append(Permutation(entries))

    return sample
