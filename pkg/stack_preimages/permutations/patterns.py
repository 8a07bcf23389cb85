"""Containment of classical, barred and vincular patterns, and the generation of
the avoidance sets ``Av_n(B)`` and ``Av_{n,k}(B)``.
"""
import itertools
import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from stack_preimages.exceptions import PatternError
from stack_preimages.permutations.perm import (
    Permutation,
    all_permutations,
    descents,
    standardize,
)

logger = logging.getLogger(__name__)

#: The largest ``n`` for which ``av_n`` filters the whole of ``S_n``. Larger classes
#: with a classical basis are grown one entry at a time.
FILTER_THRESHOLD = 9

CLASSICAL = "classical"
BARRED = "barred"
VINCULAR = "vincular"

_TOKENS_MULTI_DIGIT = re.compile(r"\[|\]|\(|\)|\d+|\S")
_TOKENS_SINGLE_DIGIT = re.compile(r"\[|\]|\(|\)|\d|\S")


@dataclass(frozen=True)
class Pattern:
    """A classical, barred or vincular permutation pattern.

    Positions are 1-based. ``barred_positions`` holds the position of the (single)
    barred entry of a barred pattern, and ``vincular_blocks`` holds inclusive
    intervals of positions whose entries must be matched by adjacent entries.
    """

    body: Permutation
    kind: str = CLASSICAL
    barred_positions: Tuple[int, ...] = ()
    vincular_blocks: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):

        object.__setattr__(self, "body", Permutation(self.body))

        if not self.body.is_standard:
            raise PatternError(f"the body {self.body} of a pattern must be standard.")

        k = len(self.body)

        if self.kind == CLASSICAL:

            if self.barred_positions or self.vincular_blocks:
                raise PatternError("a classical pattern cannot carry marks.")

        elif self.kind == BARRED:

            if self.vincular_blocks:
                raise PatternError("barred and vincular marks cannot be mixed.")
            if len(self.barred_positions) == 0:
                raise PatternError("a barred pattern needs a barred entry.")
            if len(self.barred_positions) > 1:
                raise PatternError(
                    "patterns with more than one barred entry are not supported."
                )
            if not all(1 <= position <= k for position in self.barred_positions):
                raise PatternError("barred position out of range.")

        elif self.kind == VINCULAR:

            if self.barred_positions:
                raise PatternError("barred and vincular marks cannot be mixed.")
            if len(self.vincular_blocks) == 0:
                raise PatternError("a vincular pattern needs at least one block.")

            last_end = 0

            for start, end in self.vincular_blocks:

                if end - start < 1:
                    raise PatternError("vincular blocks must span two or more entries.")
                if start <= last_end or end > k:
                    raise PatternError("vincular blocks must be disjoint and in range.")

                last_end = end

        else:
            raise PatternError(f"unknown pattern kind '{self.kind}'.")

    @classmethod
    def from_string(cls, text: str) -> "Pattern":
        return parse_pattern(text)

    def to_string(self) -> str:
        return format_pattern(self)

    @property
    def reduction(self) -> "Pattern":
        """The classical pattern obtained by deleting any barred entries."""

        if self.kind != BARRED:
            return Pattern(self.body) if self.kind == CLASSICAL else self

        kept = [
            value
            for position, value in enumerate(self.body, start=1)
            if position not in self.barred_positions
        ]
        return Pattern(standardize(kept))

    def __str__(self):
        return self.to_string()


PatternLike = Union[Pattern, Permutation, str, Sequence[int]]


def as_pattern(value: PatternLike) -> Pattern:
    """Coerces a pattern, its text form or a bare permutation into a ``Pattern``."""

    if isinstance(value, Pattern):
        return value
    if isinstance(value, str):
        return parse_pattern(value)

    return Pattern(Permutation(value))


def parse_pattern(text: str) -> Pattern:
    """Parses the text form of a pattern.

    Barred entries are written in square brackets (``"3[5]241"``) and vincular
    blocks in parentheses (``"(32)41"``, ``"34(21)"``). When the text contains
    spaces or commas, entries may have several digits (``"10 [12] 3 ..."``).
    """

    stripped = text.strip()

    if len(stripped) == 0:
        raise PatternError("an empty string is not a pattern.")

    multi_digit = re.search(r"[\s,]", stripped) is not None
    tokenizer = _TOKENS_MULTI_DIGIT if multi_digit else _TOKENS_SINGLE_DIGIT

    values: List[int] = []
    bars: List[int] = []
    blocks: List[Tuple[int, int]] = []

    in_bar = False
    block_start: Optional[int] = None

    for token in tokenizer.findall(stripped.replace(",", " ")):

        if token == "[":
            if in_bar or block_start is not None:
                raise PatternError(f"'{text}' nests pattern marks.")
            in_bar = True
        elif token == "]":
            if not in_bar:
                raise PatternError(f"'{text}' has an unmatched ']'.")
            in_bar = False
        elif token == "(":
            if in_bar or block_start is not None:
                raise PatternError(f"'{text}' nests pattern marks.")
            block_start = len(values) + 1
        elif token == ")":
            if block_start is None:
                raise PatternError(f"'{text}' has an unmatched ')'.")
            blocks.append((block_start, len(values)))
            block_start = None
        elif token.isdigit():
            values.append(int(token))
            if in_bar:
                bars.append(len(values))
        else:
            raise PatternError(f"'{text}' contains the invalid character '{token}'.")

    if in_bar or block_start is not None:
        raise PatternError(f"'{text}' has an unclosed mark.")

    try:
        body = Permutation(values)
    except ValueError as error:
        raise PatternError(f"'{text}' is not a valid pattern: {error}") from error

    if bars and blocks:
        raise PatternError(f"'{text}' mixes barred and vincular marks.")

    if bars:
        return Pattern(body, BARRED, barred_positions=tuple(bars))
    if blocks:
        return Pattern(body, VINCULAR, vincular_blocks=tuple(blocks))

    return Pattern(body)


def format_pattern(t: Pattern) -> str:

    multi_digit = any(value > 9 for value in t.body)
    tokens: List[str] = []

    block_starts = {start for start, _ in t.vincular_blocks}
    block_ends = {end for _, end in t.vincular_blocks}

    for position, value in enumerate(t.body, start=1):

        token = str(value)

        if position in t.barred_positions:
            token = f"[{token}]"
        if position in block_starts:
            token = "(" + token
        if position in block_ends:
            token = token + ")"

        tokens.append(token)

    return (" " if multi_digit else "").join(tokens)


def _neighbour_constraints(body: Sequence[int]) -> List[Tuple[Optional[int], Optional[int]]]:
    """For each pattern position ``j`` returns the earlier positions holding the
    nearest smaller and nearest larger value, which is all that is needed to keep a
    partial embedding order-isomorphic to the pattern.
    """

    constraints = []

    for j, value in enumerate(body):

        lower = upper = None

        for earlier in range(j):

            other = body[earlier]

            if other < value and (lower is None or other > body[lower]):
                lower = earlier
            if other > value and (upper is None or other < body[upper]):
                upper = earlier

        constraints.append((lower, upper))

    return constraints


def _adjacent_to_previous(t: Pattern) -> List[bool]:

    adjacent = [False] * len(t.body)

    for start, end in t.vincular_blocks:
        for position in range(start + 1, end + 1):
            adjacent[position - 1] = True

    return adjacent


def _embeddings(
    s: Sequence[int],
    body: Sequence[int],
    adjacent: Sequence[bool],
    forced: Optional[Tuple[int, int]] = None,
) -> Iterator[Tuple[int, ...]]:
    """Yields the 0-based index tuples at which ``body`` occurs in ``s``, in
    lexicographic order. ``forced`` pins one pattern position to one text index.
    """

    n, k = len(s), len(body)

    if k == 0:
        yield ()
        return
    if k > n:
        return

    constraints = _neighbour_constraints(body)
    embedding = [0] * k

    def extend(j: int, first_index: int):

        lower, upper = constraints[j]
        low_value = s[embedding[lower]] if lower is not None else 0
        high_value = s[embedding[upper]] if upper is not None else None

        last_index = n - k + j

        if forced is not None and forced[0] == j:
            if not first_index <= forced[1] <= last_index:
                return
            if adjacent[j] and forced[1] != first_index:
                return
            first_index = last_index = forced[1]
        elif adjacent[j]:
            last_index = min(first_index, last_index)

        candidates = range(first_index, last_index + 1)

        for index in candidates:

            if forced is not None and forced[0] > j and index >= forced[1]:
                return

            value = s[index]

            if value < low_value or (high_value is not None and value > high_value):
                continue

            embedding[j] = index

            if j == k - 1:
                yield tuple(embedding)
            else:
                yield from extend(j + 1, index + 1)

    yield from extend(0, 0)


def occurrences(s: Sequence[int], t: PatternLike) -> Iterator[Tuple[int, ...]]:
    """Yields every occurrence of a classical or vincular pattern in ``s`` as a tuple
    of 1-based indices.
    """

    t = as_pattern(t)

    if t.kind == BARRED:
        raise PatternError("occurrences are only defined for classical and vincular patterns.")

    for embedding in _embeddings(s, t.body, _adjacent_to_previous(t)):
        yield tuple(index + 1 for index in embedding)


def _barred_witness(s: Sequence[int], t: Pattern) -> Optional[Tuple[int, ...]]:
    """Returns the first occurrence of the reduction of a barred pattern which cannot
    be extended to an occurrence of the full body, or ``None``.
    """

    (bar,) = t.barred_positions
    barred_value = t.body[bar - 1]

    reduction = t.reduction.body
    kept_values = [value for position, value in enumerate(t.body, 1) if position != bar]

    # reduction positions holding the values just below and just above the bar.
    lower = kept_values.index(barred_value - 1) if barred_value > 1 else None
    upper = (
        kept_values.index(barred_value + 1) if barred_value < len(t.body) else None
    )

    for embedding in _embeddings(s, reduction, [False] * len(reduction)):

        left = embedding[bar - 2] if bar >= 2 else -1
        right = embedding[bar - 1] if bar - 1 < len(embedding) else len(s)

        low_value = s[embedding[lower]] if lower is not None else 0
        high_value = s[embedding[upper]] if upper is not None else None

        if not any(
            low_value < s[x] and (high_value is None or s[x] < high_value)
            for x in range(left + 1, right)
        ):
            return tuple(index + 1 for index in embedding)

    return None


def contains(s: Sequence[int], t: PatternLike) -> bool:
    """Returns whether ``s`` contains the pattern ``t``.

    A barred pattern is contained when some occurrence of its unbarred reduction is
    not part of an occurrence of the full pattern.
    """

    t = as_pattern(t)

    if t.kind == BARRED:
        return _barred_witness(s, t) is not None

    return next(_embeddings(s, t.body, _adjacent_to_previous(t)), None) is not None


def contains_bruteforce(s: Sequence[int], t: PatternLike) -> bool:
    """The definitional containment test, checking every subsequence of ``s``."""

    t = as_pattern(t)
    n = len(s)

    if t.kind == BARRED:

        (bar,) = t.barred_positions
        reduction = t.reduction.body

        for indices in itertools.combinations(range(n), len(reduction)):

            if standardize([s[i] for i in indices]) != reduction:
                continue

            left = indices[bar - 2] if bar >= 2 else -1
            right = indices[bar - 1] if bar - 1 < len(indices) else n

            extended = any(
                standardize(
                    [s[i] for i in indices[: bar - 1]]
                    + [s[x]]
                    + [s[i] for i in indices[bar - 1:]]
                )
                == t.body
                for x in range(left + 1, right)
            )

            if not extended:
                return True

        return False

    for indices in itertools.combinations(range(n), len(t.body)):

        if standardize([s[i] for i in indices]) != t.body:
            continue

        if all(
            indices[end - 1] - indices[start - 1] == end - start
            for start, end in t.vincular_blocks
        ):
            return True

    return False


def avoids_all(s: Sequence[int], basis: Sequence[PatternLike]) -> bool:
    return not any(contains(s, t) for t in basis)


def _is_classical(basis: Sequence[Pattern]) -> bool:
    return all(t.kind == CLASSICAL for t in basis)


def av_n(basis: Sequence[PatternLike], n: int) -> List[Permutation]:
    """Returns ``Av_n(basis)`` in lexicographic order.

    Notes
    -----
    * Up to ``FILTER_THRESHOLD`` the whole of ``S_n`` is filtered. Above it, a
      classical basis is handled by inserting ``n`` into every avoider of length
      ``n - 1`` and only testing the embeddings that use the new entry.
    """

    basis = [as_pattern(t) for t in basis]

    if n <= FILTER_THRESHOLD or not _is_classical(basis):

        if n > FILTER_THRESHOLD:
            logger.warning(
                f"filtering all of S_{n} for a basis with marked patterns, this may be slow."
            )

        return [p for p in all_permutations(n) if avoids_all(p, basis)]

    previous = av_n(basis, n - 1)
    maxima = [t.body.index(len(t.body)) for t in basis]

    grown = []

    for p in previous:

        for position in range(n):

            candidate = Permutation(p[:position] + (n,) + p[position:])

            if any(
                next(
                    _embeddings(
                        candidate, t.body, [False] * len(t.body), (maximum, position)
                    ),
                    None,
                )
                is not None
                for t, maximum in zip(basis, maxima)
            ):
                continue

            grown.append(candidate)

    grown.sort()

    logger.debug(f"grew |Av_{n}| = {len(grown)} from {len(previous)} avoiders")
    return grown


def av_nk(basis: Sequence[PatternLike], n: int, k: int) -> List[Permutation]:
    """Returns the elements of ``Av_n(basis)`` with exactly ``k`` descents."""
    return [p for p in av_n(basis, n) if len(descents(p)) == k]


def av_n_ending_in_max(basis: Sequence[PatternLike], n: int) -> List[Permutation]:
    """Returns the elements of ``Av_n(basis)`` whose last entry is ``n``.

    For a classical basis ``B`` these are exactly the permutations ``p ⊕ 1`` with
    ``p`` in ``Av_{n-1}(B*)``, where ``B*`` removes the last entry of every pattern
    that ends in its maximum.
    """

    basis = [as_pattern(t) for t in basis]

    if n == 0:
        return av_n(basis, 0)

    if not _is_classical(basis):
        return [p for p in av_n(basis, n) if p[-1] == n]

    reduced = []

    for t in basis:

        if t.body[-1] != len(t.body):
            reduced.append(t)
            continue
        if len(t.body) == 1:
            # Every permutation contains the empty pattern.
            return []

        reduced.append(Pattern(Permutation(t.body[:-1])))

    return [Permutation(p + (n,)) for p in av_n(reduced, n - 1)]
