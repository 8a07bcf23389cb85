"""Permutations in one-line notation, their descent and peak statistics, and the
named families of permutations that the fertility formulas are stated for.

All index based interfaces in this module are 1-based, so that ``descents(3142)``
returns ``(1, 3)``. Python's own sequence indexing on a ``Permutation`` is left
untouched and remains 0-based.
"""
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from stack_preimages.exceptions import PermutationError, UnknownIdentifierError

IndexTuple = Tuple[int, ...]
Interval = Tuple[int, int]

_SEPARATORS = re.compile(r"[\s,]+")


class Permutation(tuple):
    """An immutable word of distinct positive integers.

    A permutation is *standard* when its entries are exactly ``1, ..., n``. Most
    of the machinery in this package requires standard permutations, but arbitrary
    entry sets are allowed so that sub-words and patterns can be represented before
    they are standardized.
    """

    def __new__(cls, entries: Iterable[int] = ()):

        values = tuple(int(value) for value in entries)

        if len(set(values)) != len(values):
            raise PermutationError(f"{values} contains repeated entries.")
        if any(value < 1 for value in values):
            raise PermutationError(f"{values} contains non-positive entries.")

        return super(Permutation, cls).__new__(cls, values)

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        return parse_permutation(text)

    def to_string(self) -> str:
        return format_permutation(self)

    @property
    def is_standard(self) -> bool:
        return set(self) == set(range(1, len(self) + 1))

    def __repr__(self):
        return f"Permutation('{self.to_string()}')"

    def __str__(self):
        return self.to_string()


@dataclass(frozen=True)
class StatVector:
    """The descent based statistics of a permutation, all with 1-based indices."""

    descents: IndexTuple
    peaks: IndexTuple
    ascending_runs: Tuple[Interval, ...]
    descending_runs: Tuple[Interval, ...]
    ltr_maxima: IndexTuple


def parse_permutation(text: str) -> Permutation:
    """Parses a permutation from its text form.

    Entries are separated by spaces or commas (``"3 1 4 2"``). A contiguous digit
    string such as ``"3142"`` is accepted as a shorthand when every entry is a single
    digit.

    Parameters
    ----------
    text
        The text to parse.

    Returns
    -------
        The parsed permutation.
    """

    stripped = text.strip()

    if len(stripped) == 0:
        return Permutation()

    tokens = [token for token in _SEPARATORS.split(stripped) if len(token) > 0]

    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])

    if not all(token.isdigit() for token in tokens):
        raise PermutationError(f"'{text}' is not a valid permutation.")

    return Permutation(int(token) for token in tokens)


def format_permutation(p: Sequence[int]) -> str:
    return " ".join(str(value) for value in p)


def _require_standard(p: Permutation, operation: str):

    if not p.is_standard:
        raise PermutationError(f"{operation} requires a standard permutation, got {p}.")


def descents(p: Sequence[int]) -> IndexTuple:
    """Returns the (1-based) indices ``i`` with ``p_i > p_{i+1}`` in increasing order."""
    return tuple(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def peaks(p: Sequence[int]) -> IndexTuple:
    """Returns the (1-based) indices ``i`` with ``p_{i-1} < p_i > p_{i+1}``."""
    return tuple(
        i + 1 for i in range(1, len(p) - 1) if p[i - 1] < p[i] > p[i + 1]
    )


def _runs(p: Sequence[int], ascending: bool) -> Tuple[Interval, ...]:

    if len(p) == 0:
        return ()

    runs: List[Interval] = []
    start = 1

    for i in range(1, len(p)):

        breaks = p[i - 1] > p[i] if ascending else p[i - 1] < p[i]

        if breaks:
            runs.append((start, i))
            start = i + 1

    runs.append((start, len(p)))
    return tuple(runs)


def ascending_runs(p: Sequence[int]) -> Tuple[Interval, ...]:
    """Returns the maximal increasing factors of ``p`` as inclusive index intervals."""
    return _runs(p, ascending=True)


def descending_runs(p: Sequence[int]) -> Tuple[Interval, ...]:
    """Returns the maximal decreasing factors of ``p`` as inclusive index intervals."""
    return _runs(p, ascending=False)


def ltr_maxima(p: Sequence[int]) -> IndexTuple:
    """Returns the indices of the entries larger than every entry to their left."""

    maxima = []
    current = 0

    for i, value in enumerate(p):

        if value > current:
            maxima.append(i + 1)
            current = value

    return tuple(maxima)


def stats(p: Sequence[int]) -> StatVector:
    return StatVector(
        descents=descents(p),
        peaks=peaks(p),
        ascending_runs=ascending_runs(p),
        descending_runs=descending_runs(p),
        ltr_maxima=ltr_maxima(p),
    )


def standardize(word: Sequence[int]) -> Permutation:
    """Returns the standard permutation with the same relative order as ``word``,
    e.g. ``957 -> 312``.
    """

    if len(set(word)) != len(word):
        raise PermutationError(f"{tuple(word)} contains repeated entries.")

    ranks = {value: rank + 1 for rank, value in enumerate(sorted(word))}
    return Permutation(ranks[value] for value in word)


def direct_sum(*permutations: Permutation) -> Permutation:
    """Returns ``a ⊕ b ⊕ ...``, placing the plot of each permutation above and to the
    right of the plot of the previous ones. The empty permutation is the identity.
    """

    entries: List[int] = []

    for p in permutations:

        p = Permutation(p)
        _require_standard(p, "direct_sum")

        offset = len(entries)
        entries.extend(value + offset for value in p)

    return Permutation(entries)


def reverse_complement(p: Permutation) -> Permutation:
    """Returns the permutation whose ``i``-th entry is ``n + 1 - p_{n+1-i}``."""

    p = Permutation(p)
    _require_standard(p, "reverse_complement")

    n = len(p)
    return Permutation(n + 1 - value for value in reversed(p))


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def dec(a: int) -> Permutation:

    if a < 0:
        raise PermutationError(f"dec requires a >= 0, got {a}.")

    return Permutation(range(a, 0, -1))


def sigma(n: int, ell: int) -> Permutation:
    """``ℓ 1 2 ... (ℓ-1) (ℓ+1) ... n``"""

    if not 1 <= ell <= n:
        raise PermutationError(f"sigma requires 1 <= ell <= n, got n={n}, ell={ell}.")

    return Permutation(
        [ell] + list(range(1, ell)) + list(range(ell + 1, n + 1))
    )


def gamma(n: int, ell: int) -> Permutation:
    """``2 3 ... ℓ 1 (ℓ+1) ... n``"""

    if not 1 <= ell <= n:
        raise PermutationError(f"gamma requires 1 <= ell <= n, got n={n}, ell={ell}.")

    return Permutation(
        list(range(2, ell + 1)) + [1] + list(range(ell + 1, n + 1))
    )


def theta(n: int, k: int) -> Permutation:
    """``(k+1) k ... 1 (k+2) ... n``, the only element of ``Av_n(132, 231, 312)`` with
    exactly ``k`` descents.
    """

    if not 0 <= k <= n - 1:
        raise PermutationError(f"theta requires 0 <= k <= n - 1, got n={n}, k={k}.")

    return direct_sum(dec(k + 1), identity(n - k - 1))


def delta(h: int, i: int, t: int) -> Permutation:
    """``(h+1) ... (h+i) 1 ... h (h+i+1) ... (h+i+t)``"""

    if h < 1 or i < 1 or t < 1:
        raise PermutationError(f"delta requires h, i, t >= 1, got ({h}, {i}, {t}).")

    return Permutation(
        list(range(h + 1, h + i + 1))
        + list(range(1, h + 1))
        + list(range(h + i + 1, h + i + t + 1))
    )


def layered(composition: Sequence[int]) -> Permutation:
    """Returns ``Dec_{a_1} ⊕ ... ⊕ Dec_{a_t}`` for the composition ``(a_1, ..., a_t)``."""

    if any(part < 1 for part in composition):
        raise PermutationError(f"{tuple(composition)} is not a composition.")

    return direct_sum(*(dec(part) for part in composition))


_FAMILIES = {
    "identity": (identity, 1),
    "dec": (dec, 1),
    "sigma": (sigma, 2),
    "gamma": (gamma, 2),
    "theta": (theta, 2),
    "delta": (delta, 3),
}


def family(name: str, *parameters: int) -> Permutation:
    """Builds a member of one of the named permutation families.

    Parameters
    ----------
    name
        One of ``identity``, ``dec``, ``sigma``, ``gamma``, ``theta`` or ``delta``.
    parameters
        The family parameters, e.g. ``family("delta", 1, 3, 2)``.
    """

    if name not in _FAMILIES:
        raise UnknownIdentifierError("family", name, _FAMILIES)

    builder, n_parameters = _FAMILIES[name]

    if len(parameters) != n_parameters:
        raise PermutationError(
            f"the {name} family takes {n_parameters} parameters, got {len(parameters)}."
        )

    return builder(*parameters)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Yields every element of ``S_n`` in lexicographic order."""

    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)
