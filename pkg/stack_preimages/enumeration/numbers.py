"""Exact closed forms (Catalan, Narayana, Fine and friends, and the fertility
formulas proved for individual permutation classes) together with the composition
and partition posets used to count preimages of layered permutations.

Every count is an arbitrary precision ``int``. Closed forms with a division are
evaluated with the divisibility asserted, never with floating point.
"""
import functools
import itertools
import math
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from stack_preimages.enumeration.series import gf_coefficients
from stack_preimages.exceptions import (
    CompositionError,
    InexactDivisionError,
    UnknownIdentifierError,
)

Composition = Tuple[int, ...]
Partition = Tuple[int, ...]


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, taken to be zero outside of ``0 <= b <= a``."""

    if a < 0 or b < 0 or b > a:
        return 0

    return math.comb(a, b)


def exact_divide(numerator: int, denominator: int) -> int:

    quotient, remainder = divmod(numerator, denominator)

    if remainder != 0:
        raise InexactDivisionError(f"{numerator} is not divisible by {denominator}.")

    return quotient


@functools.lru_cache(maxsize=None)
def catalan(n: int) -> int:

    if n < 0:
        return 0

    return exact_divide(binomial(2 * n, n), n + 1)


def catalan_product(q: Sequence[int]) -> int:
    """``C_q``, the product of the Catalan numbers of the parts of ``q``."""
    return math.prod(catalan(part) for part in q)


@functools.lru_cache(maxsize=None)
def narayana(n: int, m: int) -> int:
    """``N(n, m) = (1/n) C(n, m) C(n, m - 1)``, the number of elements of
    ``s^{-1}(12...n)`` with ``m - 1`` descents.
    """

    if n < 1:
        return 0

    return exact_divide(binomial(n, m) * binomial(n, m - 1), n)


@functools.lru_cache(maxsize=None)
def vee(i: int, j: int) -> int:
    """``V(i, j) = 2^(i - 2j + 1) C(i - 1, 2j - 2) C_(j - 1)``, the number of decreasing
    binary plane trees on ``i`` vertices with ``j`` leaves.
    """

    if i < 1 or j < 1 or 2 * j - 2 > i - 1:
        return 0

    return 2 ** (i - 2 * j + 1) * binomial(i - 1, 2 * j - 2) * catalan(j - 1)


def gen_narayana(k: int, n: int, r: int) -> int:
    """The generalized Narayana number ``N_k(n, r) = ((k+1)/n) C(n, r+k) C(n, r-1)``."""

    if n < 1:
        return 0

    return exact_divide((k + 1) * binomial(n, r + k) * binomial(n, r - 1), n)


def w2(n: int) -> int:
    """The number of 2-stack-sortable permutations of length ``n``,
    ``2 C(3n, n) / ((n + 1)(2n + 1))``.
    """

    if n == 0:
        return 1

    return exact_divide(2 * binomial(3 * n, n), (n + 1) * (2 * n + 1))


def baxter(n: int) -> int:
    """The number of Baxter permutations of length ``n``."""

    if n == 0:
        return 1

    total = sum(
        binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1)
        for k in range(1, n + 1)
    )
    return exact_divide(2 * total, n * (n + 1) ** 2)


def fine(n: int) -> int:
    """The Fine number ``F_n``, read off from its generating function so that
    ``F_0, F_1, F_2, ... = 1, 0, 1, 2, 6, ...``.
    """
    return gf_coefficients("fine", n)[n]


def g_refined(n: int, m: int) -> int:
    """``g(n, m)``, the number of elements of ``s^{-1}(Av_n(132, 231, 312))`` with
    ``m`` descents.
    """
    return sum(gen_narayana(k, n - k, m - k + 1) for k in range((n - 1) // 2 + 1))


def h_refined(n: int, m: int) -> int:
    """``h(n, m) = 2^(n-2m-1) C(n+2, m+1) C(n-m-1, m) / (n + 2)``, the number of
    elements of ``s^{-1}(Av_n(132, 231, 312))`` with ``m`` peaks.
    """

    if m < 0 or 2 * m > n - 1:
        return 0

    return exact_divide(
        2 ** (n - 2 * m - 1) * binomial(n + 2, m + 1) * binomial(n - m - 1, m), n + 2
    )


def av321_by_descents(n: int, k: int) -> int:
    """``|Av_{n,k}(321)|``, the number of 321-avoiding permutations of length ``n``
    with ``k`` descents.
    """

    if k == 0:
        return 1 if n >= 0 else 0

    total = sum(
        binomial(k + j - 1, k - 1) * binomial(n + 1 - k, n - 2 * k - j)
        for j in range(n + 2 - 2 * k)
    )
    return exact_divide(binomial(n + 1, k) * total, n + 1)


def thm3(n: int) -> int:
    """``|s^{-1}(Av_n(132, 231, 312, 321))| = 2 C_n - 2 C_(n-1)`` for ``n >= 2``."""
    return 2 * catalan(n) - 2 * catalan(n - 1)


def _two_part_refinement(table: Callable[[int, int], int], n: int, m: int) -> int:

    return table(n, m + 1) + sum(
        table(n - i - 1, j) * table(i, m - j + 1)
        for i in range(1, n - 1)
        for j in range(1, m + 1)
    )


def thm3_descents(n: int, m: int) -> int:
    return _two_part_refinement(narayana, n, m)


def thm3_peaks(n: int, m: int) -> int:
    return _two_part_refinement(vee, n, m)


def thm9(n: int) -> int:
    """``|s^{-1}(Av_n(231, 312, 321))|`` for ``n >= 1``."""

    total = sum(conj1_rhs(n, k) for k in range(n))

    if total.denominator != 1:
        raise InexactDivisionError(f"the layered preimage count at n={n} is {total}.")

    return total.numerator


def thm10(n: int, k: int) -> int:
    """``|s^{-1}(theta_{n,k})| = (2k + 2) C(2n - 2k - 1, n) / (n + 1)``, which is also an
    upper bound on the fertility of every permutation with ``k`` descents.
    """
    return exact_divide((2 * k + 2) * binomial(2 * n - 2 * k - 1, n), n + 1)


def thm10_descents(n: int, k: int, m: int) -> int:
    return gen_narayana(k, n - k, m - k + 1)


def thm16(n: int) -> int:
    return binomial(2 * n - 2, n - 1)


def thm16_descents(n: int, m: int) -> int:
    return binomial(n - 1, m) ** 2


def thm16_peaks(n: int, m: int) -> int:
    """``2^(n-2m-1) C(n-1, 2m) C(2m, m)``, the number of elements of
    ``s^{-1}(Av_n(132, 231, 321))`` with ``m`` peaks.
    """

    exponent = n - 2 * m - 1
    value = binomial(n - 1, 2 * m) * binomial(2 * m, m)

    if value == 0:
        return 0

    return 2 ** exponent * value


def _weighted_two_part_refinement(table: Callable[[int, int], int], n: int, m: int) -> int:

    return table(n, m + 1) + sum(
        r * (n - r - 1) * table(r, j) * table(n - r - 1, m + 1 - j)
        for r in range(1, n - 1)
        for j in range(1, m + 1)
    )


def eq12(n: int, m: int) -> int:
    """The number of elements of ``s^{-1}(Av_n(132, 321))`` with ``m`` descents."""
    return _weighted_two_part_refinement(narayana, n, m)


def eq13(n: int, m: int) -> int:
    """The number of elements of ``s^{-1}(Av_n(132, 321))`` with ``m`` peaks."""
    return _weighted_two_part_refinement(vee, n, m)


def eq12_total(n: int) -> int:
    """The coefficient of ``x^n`` in ``C(x) - 1 + x^3 C'(x)^2``."""

    return catalan(n) + sum(
        r * (n - r - 1) * catalan(r) * catalan(n - r - 1) for r in range(1, n - 1)
    )


def thm13_upper(n: int) -> int:
    """The finite ``n`` upper bound on ``|s^{-1}(Av_n(321))|`` obtained by bounding the
    fertility of every element of ``Av_{n,k}(321)`` by ``thm10(n, k)``.
    """
    return sum(thm10(n, k) * av321_by_descents(n, k) for k in range(n))


def conj1_rhs(n: int, k: int) -> Fraction:
    return Fraction(binomial(n - k - 1, k) * binomial(2 * n - 2 * k, n), n + 1)


def _conj1_rhs_integer(n: int, k: int) -> int:

    value = conj1_rhs(n, k)

    if value.denominator != 1:
        raise InexactDivisionError(f"conj1_rhs({n}, {k}) = {value} is not an integer.")

    return value.numerator


THEOREM_FORMULAS: Dict[str, Callable[..., int]] = {
    "thm3": thm3,
    "thm3_descents": thm3_descents,
    "thm3_peaks": thm3_peaks,
    "thm9": thm9,
    "thm10": thm10,
    "thm10_descents": thm10_descents,
    "thm14_fertility_bound": thm10,
    "thm14_descent_bound": thm10_descents,
    "thm16": thm16,
    "thm16_descents": thm16_descents,
    "thm16_peaks": thm16_peaks,
    "thm13_upper": thm13_upper,
    "eq12": eq12,
    "eq12_total": eq12_total,
    "eq13": eq13,
    "eq14": av321_by_descents,
    "w2": w2,
    "baxter": baxter,
    "conj1_rhs": _conj1_rhs_integer,
}


def thm_formula(identifier: str, *parameters: int) -> int:
    """Evaluates one of the named closed forms, e.g. ``thm_formula("thm10", 7, 2)``."""

    if identifier not in THEOREM_FORMULAS:
        raise UnknownIdentifierError("formula", identifier, THEOREM_FORMULAS)

    return THEOREM_FORMULAS[identifier](*parameters)


def comp_set(a: int, b: int) -> List[Composition]:
    """Returns ``Comp_a(b)``, the compositions of ``b`` into ``a`` positive parts, in
    lexicographic order.
    """

    if a == 0:
        return [()] if b == 0 else []
    if a < 0 or b < a:
        return []

    compositions = []

    for cuts in itertools.combinations(range(1, b), a - 1):

        bounds = (0,) + cuts + (b,)
        compositions.append(tuple(hi - lo for lo, hi in zip(bounds, bounds[1:])))

    return compositions


def comp_leq(x: Sequence[int], y: Sequence[int]) -> bool:
    """Returns whether ``x ⪯ y``, i.e. every prefix sum of ``x`` is at most the
    corresponding prefix sum of ``y``.
    """

    if len(x) != len(y):
        raise CompositionError(f"{tuple(x)} and {tuple(y)} have different lengths.")

    return all(
        a <= b for a, b in zip(itertools.accumulate(x), itertools.accumulate(y))
    )


def _require_composition(x: Sequence[int]):

    if len(x) == 0 or any(part < 1 for part in x):
        raise CompositionError(f"{tuple(x)} is not a composition.")


def psi(x: Sequence[int]) -> Partition:
    """Maps ``x ∈ Comp_a(b)`` to the partition in ``L(b - a, a - 1)`` with exactly
    ``x_i - 1`` parts equal to ``a - i`` for ``1 <= i <= a - 1``.
    """

    _require_composition(x)
    a = len(x)

    return tuple(
        part for i in range(1, a) for part in itertools.repeat(a - i, x[i - 1] - 1)
    )


def psi_inverse(partition: Sequence[int], a: int, b: int) -> Composition:

    if any(not 1 <= part <= a - 1 for part in partition):
        raise CompositionError(f"{tuple(partition)} does not lie in L({b - a}, {a - 1}).")

    x = [1 + sum(1 for part in partition if part == a - i) for i in range(1, a)]
    x.append(b - sum(x))

    if x[-1] < 1:
        raise CompositionError(f"{tuple(partition)} does not lie in L({b - a}, {a - 1}).")

    return tuple(x)


def partition_leq(smaller: Sequence[int], larger: Sequence[int]) -> bool:
    """Returns whether the Young diagram of ``smaller`` fits inside that of ``larger``."""
    return len(smaller) <= len(larger) and all(
        a <= b for a, b in zip(smaller, larger)
    )


def partitions_in_box(u: int, v: int) -> Iterator[Partition]:
    """Yields ``L(u, v)``: every partition with at most ``u`` parts, each at most ``v``."""

    def extend(prefix: Tuple[int, ...], largest: int) -> Iterator[Partition]:

        yield prefix

        if len(prefix) == u:
            return

        for part in range(1, largest + 1):
            yield from extend(prefix + (part,), part)

    yield from extend((), v)


def count_subdiagrams(partition: Sequence[int]) -> int:
    """Counts the partitions (including the empty one) whose Young diagrams fit
    inside the diagram of ``partition``, one row at a time.
    """

    if len(partition) == 0:
        return 1

    # ways[v] counts the admissible choices of the rows so far with the current
    # row of length v.
    ways = [1] * (partition[0] + 1)

    for row in partition[1:]:

        suffix = list(itertools.accumulate(reversed(ways)))[::-1]
        ways = [suffix[v] for v in range(row + 1)]

    return sum(ways)


def downset_count(x: Sequence[int]) -> int:
    """``D_x``, the number of compositions ``y`` with ``y ⪯ x``."""
    return count_subdiagrams(psi(x))


def downset_count_bruteforce(x: Sequence[int]) -> int:

    _require_composition(x)
    return sum(1 for y in comp_set(len(x), sum(x)) if comp_leq(y, x))


def conj1_lhs(n: int, k: int) -> int:
    """``sum C_q D_q`` over ``q ∈ Comp_{k+1}(n - k)``, which counts the preimages of
    the layered permutations in ``Av_{n,k}(231, 312, 321)``.
    """
    return sum(catalan_product(q) * downset_count(q) for q in comp_set(k + 1, n - k))
