"""Valid hook configurations of a permutation, the colorings and compositions they
induce, and the fertility formulas built on top of them.

The plot of a permutation ``p`` is the set of points ``(i, p_i)``. A hook joins a
southwest endpoint ``(i, p_i)`` to a northeast endpoint ``(j, p_j)`` with
``i < j`` and ``p_i < p_j`` by a vertical segment followed by a horizontal one. A
valid hook configuration places one hook on every descent top so that no point of
the plot lies directly above a hook and no two hooks meet, except where the
northeast endpoint of one hook is the southwest endpoint of another.

Indices are 1-based throughout.
"""
import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy import Poly

from stack_preimages.enumeration.numbers import (
    Composition,
    catalan_product,
    comp_leq,
    comp_set,
    narayana,
    vee,
)
from stack_preimages.exceptions import InvalidInputError, PermutationError
from stack_preimages.permutations.patterns import contains
from stack_preimages.permutations.perm import (
    Permutation,
    descending_runs,
    descents,
    layered,
)

logger = logging.getLogger(__name__)

SKY = 0

_Y = sympy.Symbol("y")

Box = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Hook:
    """A hook from the southwest endpoint ``(sw, p_sw)`` to the northeast endpoint
    ``(ne, p_ne)`` of its host permutation.
    """

    sw: int
    ne: int

    def __post_init__(self):
        assert self.sw < self.ne, "a hook must move to the right."


@dataclass(frozen=True)
class ValidHookConfiguration:
    """The hooks ``(H_1, ..., H_k)`` of a valid hook configuration, where ``H_l`` has
    its southwest endpoint on the ``l``-th descent top of ``host``.
    """

    host: Permutation
    hooks: Tuple[Hook, ...]

    def to_pairs(self) -> List[Tuple[int, int]]:
        return [(hook.sw, hook.ne) for hook in self.hooks]


@dataclass(frozen=True)
class Coloring:
    """The coloring induced by a valid hook configuration.

    ``colors[x - 1]`` is ``SKY`` (0) for a sky colored point, ``l`` for a point
    colored like the hook ``H_l``, and ``None`` for the uncolored northeast
    endpoints.
    """

    colors: Tuple[Optional[int], ...]
    n_hooks: int

    def class_sizes(self) -> Composition:

        sizes = [0] * (self.n_hooks + 1)

        for color in self.colors:
            if color is not None:
                sizes[color] += 1

        return tuple(sizes)


@dataclass(frozen=True)
class CanonicalData:
    """The canonical valid hook configuration of a permutation and the parameters
    derived from it.

    Attributes
    ----------
    configuration
        The canonical configuration ``(H_1*, ..., H_k*)``.
    b_star
        The northeast endpoint ``b_i*`` of each canonical hook.
    q_star
        The composition ``(q_0*, ..., q_k*)`` induced by the canonical configuration.
    e
        ``(e_0, ..., e_k)`` where ``d_(e_i - 1) < b_i* <= d_(e_i)`` and ``e_0 = k + 1``.
    alpha
        ``(alpha_1, ..., alpha_(k+1))`` where ``alpha_j`` counts the ``i >= 1`` with
        ``e_i = j``.
    d
        The descents padded as ``(d_0, d_1, ..., d_k, d_(k+1)) = (0, ..., n)``.
    """

    configuration: ValidHookConfiguration
    b_star: Tuple[int, ...]
    q_star: Composition
    e: Tuple[int, ...]
    alpha: Tuple[int, ...]
    d: Tuple[int, ...]


def _values(p: Sequence[int]) -> Tuple[int, ...]:
    # Pad so that values[i] is the i-th (1-based) entry.
    return (0,) + tuple(p)


def _ne_candidates(values: Sequence[int], sw: int) -> List[int]:
    """The northeast endpoints available to a hook on ``sw``: the left-to-right maxima
    of ``p_(sw+1) ... p_n`` that exceed ``p_sw``. Any other choice leaves a point
    directly above the hook.
    """

    candidates = []
    running = 0

    for j in range(sw + 1, len(values)):

        if values[j] > running:

            if values[j] > values[sw]:
                candidates.append(j)

            running = values[j]

    return candidates


def _segments(values: Sequence[int], hook: Hook) -> Tuple[Box, Box]:
    """The vertical and horizontal segments of a hook as ``(x0, x1, y0, y1)`` boxes."""

    top = values[hook.ne]

    return (
        (hook.sw, hook.sw, values[hook.sw], top),
        (hook.sw, hook.ne, top, top),
    )


def _meet(first: Box, second: Box) -> Optional[Box]:

    x0, x1 = max(first[0], second[0]), min(first[1], second[1])
    y0, y1 = max(first[2], second[2]), min(first[3], second[3])

    if x0 > x1 or y0 > y1:
        return None

    return x0, x1, y0, y1


def hooks_conflict(values: Sequence[int], first: Hook, second: Hook) -> bool:
    """Returns whether two hooks on the padded ``values`` intersect anywhere other
    than at a point which is the northeast endpoint of one and the southwest endpoint
    of the other.
    """

    allowed = None

    if first.ne == second.sw:
        allowed = (first.ne, first.ne, values[first.ne], values[first.ne])
    elif second.ne == first.sw:
        allowed = (second.ne, second.ne, values[second.ne], values[second.ne])

    for a, b in itertools.product(_segments(values, first), _segments(values, second)):

        shared = _meet(a, b)

        if shared is not None and shared != allowed:
            return True

    return False


def geometry_point_above_hook(host: Sequence[int], x: int, hook: Hook) -> bool:
    """Returns whether the point ``(x, p_x)`` lies directly above ``hook``, i.e.
    ``sw < x < ne`` and ``p_x > p_ne``. The endpoint columns never violate a hook.
    """

    values = _values(host)
    return hook.sw < x < hook.ne and values[x] > values[hook.ne]


def is_valid_configuration(host: Sequence[int], hooks: Sequence[Hook]) -> bool:
    """Checks every condition a valid hook configuration must satisfy."""

    values = _values(host)
    tops = descents(host)

    if tuple(hook.sw for hook in hooks) != tops:
        return False

    for hook in hooks:

        if not 1 <= hook.sw < hook.ne <= len(host):
            return False
        if values[hook.sw] > values[hook.ne]:
            return False
        if any(
            geometry_point_above_hook(host, x, hook)
            for x in range(hook.sw + 1, hook.ne)
        ):
            return False

    return not any(
        hooks_conflict(values, first, second)
        for first, second in itertools.combinations(hooks, 2)
    )


def enumerate_vhcs(p: Sequence[int]) -> List[ValidHookConfiguration]:
    """Returns every valid hook configuration of ``p``.

    The hooks are chosen from ``H_k`` back to ``H_1``, each northeast endpoint tried
    from left to right, so the output order is deterministic.
    """

    host = Permutation(p)
    values = _values(host)
    tops = descents(host)
    k = len(tops)

    candidates = [_ne_candidates(values, sw) for sw in tops]
    chosen: List[Optional[Hook]] = [None] * k
    configurations = []

    def place(index: int):

        if index < 0:
            configurations.append(ValidHookConfiguration(host, tuple(chosen)))
            return

        for ne in candidates[index]:

            hook = Hook(tops[index], ne)

            if any(
                hooks_conflict(values, hook, other) for other in chosen[index + 1:]
            ):
                continue

            chosen[index] = hook
            place(index - 1)

        chosen[index] = None

    place(k - 1)
    return configurations


def _coloring(values: Sequence[int], hooks: Sequence[Hook]) -> Coloring:

    n = len(values) - 1
    northeast = {hook.ne for hook in hooks}

    colors: List[Optional[int]] = []

    for x in range(1, n + 1):

        if x in northeast:
            colors.append(None)
            continue

        # The point sees the lowest hook passing strictly over its column. A
        # southwest endpoint looks past its own vertical segment.
        seen = [
            (values[hook.ne], label)
            for label, hook in enumerate(hooks, start=1)
            if hook.sw < x < hook.ne
        ]
        colors.append(min(seen)[1] if seen else SKY)

    return Coloring(tuple(colors), len(hooks))


def induced_coloring(v: ValidHookConfiguration) -> Coloring:
    return _coloring(_values(v.host), v.hooks)


def induced_composition(v: ValidHookConfiguration) -> Composition:
    """Returns ``(q_0, ..., q_k)``: the number of sky colored points followed by the
    number of points sharing the color of each hook.
    """
    return induced_coloring(v).class_sizes()


def compositions_by_enumeration(p: Sequence[int]) -> List[Composition]:
    """The compositions induced by every valid hook configuration of ``p``, with
    repeats kept.
    """
    return [induced_composition(v) for v in enumerate_vhcs(p)]


def canonical_vhc(p: Sequence[int]) -> Optional[CanonicalData]:
    """Builds the canonical valid hook configuration by placing ``H_k*, ..., H_1*``
    in turn, each on the leftmost northeast endpoint that does not meet the hooks
    already placed.

    Returns
    -------
        The canonical data, or ``None`` if some hook cannot be placed, in which case
        ``p`` has no preimages under ``s``.
    """

    host = Permutation(p)
    values = _values(host)
    tops = descents(host)
    n, k = len(host), len(tops)

    chosen: List[Hook] = []

    for sw in reversed(tops):

        hook = next(
            (
                Hook(sw, ne)
                for ne in _ne_candidates(values, sw)
                if not any(hooks_conflict(values, Hook(sw, ne), other) for other in chosen)
            ),
            None,
        )

        if hook is None:
            return None

        chosen.append(hook)

    hooks = tuple(reversed(chosen))
    configuration = ValidHookConfiguration(host, hooks)

    d = (0,) + tops + (n,)
    b_star = tuple(hook.ne for hook in hooks)

    e = [k + 1] + [
        next(index for index in range(1, k + 2) if d[index - 1] < b <= d[index])
        for b in b_star
    ]
    alpha = tuple(sum(1 for e_i in e[1:] if e_i == j) for j in range(1, k + 2))

    return CanonicalData(
        configuration=configuration,
        b_star=b_star,
        q_star=_coloring(values, hooks).class_sizes(),
        e=tuple(e),
        alpha=alpha,
        d=d,
    )


def _window_constraints(data: CanonicalData) -> Dict[int, List[Tuple[int, int]]]:
    """Collects the lower bounds on window sums ``q_m + ... + q_P`` that a valid
    composition must satisfy, keyed by the last index ``P`` of the window.
    """

    k = len(data.b_star)
    e, d, alpha, q_star = data.e, data.d, data.alpha, data.q_star

    constraints: Dict[int, List[Tuple[int, int]]] = {}

    for m in range(k + 1):

        last = e[m] - 1
        constraints.setdefault(last, []).append((m, sum(q_star[m:last + 1])))

        for p in range(m, e[m] - 1):

            bound = d[p + 1] - d[m] - sum(alpha[j - 1] for j in range(m + 1, p + 2))
            constraints.setdefault(p, []).append((m, bound))

    return constraints


def valid_compositions(p: Sequence[int]) -> List[Composition]:
    """Returns the valid compositions of ``p`` in lexicographic order.

    They are generated part by part from the canonical data, rejecting a prefix as
    soon as a window that ends at its last part falls below its bound.
    """

    data = canonical_vhc(p)

    if data is None:
        return []

    n, k = len(p), len(data.b_star)
    total = n - k

    constraints = _window_constraints(data)

    compositions = []
    parts = [0] * (k + 1)
    prefix = [0] * (k + 2)

    def extend(index: int):

        remaining = total - prefix[index]

        if index == k:
            choices = range(remaining, remaining + 1)
        else:
            choices = range(1, remaining - (k - index) + 1)

        for part in choices:

            parts[index] = part
            prefix[index + 1] = prefix[index] + part

            if any(
                prefix[index + 1] - prefix[m] < bound
                for m, bound in constraints.get(index, ())
            ):
                continue

            if index == k:
                compositions.append(tuple(parts))
            else:
                extend(index + 1)

    if n == 0:
        return [()]

    extend(0)

    return compositions


def fertility(p: Sequence[int]) -> int:
    """Returns ``|s^{-1}(p)|`` as the sum of ``C_q`` over the valid compositions."""
    return sum(catalan_product(q) for q in valid_compositions(p))


@functools.lru_cache(maxsize=None)
def _part_polynomial(size: int, statistic: str) -> Poly:

    table = narayana if statistic == "descents" else vee
    return Poly(
        [table(size, j) for j in range(size, 0, -1)], _Y, domain=sympy.ZZ
    )


@functools.lru_cache(maxsize=None)
def _composition_profile(q: Composition, statistic: str) -> Tuple[int, ...]:
    """The coefficients of ``y^0, y^1, ...`` in ``prod_t sum_j T(q_t, j) y^(j-1)``,
    where ``T`` is ``N`` for descents and ``V`` for peaks.
    """

    product = Poly(1, _Y, domain=sympy.ZZ)

    for part in q:
        product = product * _part_polynomial(part, statistic)

    return tuple(int(c) for c in reversed(product.all_coeffs()))


def _distribution(p: Sequence[int], statistic: str) -> Tuple[int, ...]:

    if statistic not in ("descents", "peaks"):
        raise InvalidInputError(
            f"statistic must be 'descents' or 'peaks', got '{statistic}'."
        )

    n = len(p)

    if n == 0:
        return (1,)

    k = len(descents(p))
    counts = [0] * n

    for q in valid_compositions(p):
        for offset, value in enumerate(_composition_profile(q, statistic)):
            counts[offset + k] += value

    return tuple(counts)


def descent_distribution(p: Sequence[int]) -> Tuple[int, ...]:
    """Returns ``(f_0(p), ..., f_(n-1)(p))`` where ``f_m(p)`` counts the elements of
    ``s^{-1}(p)`` with exactly ``m`` descents.
    """
    return _distribution(p, "descents")


def peak_distribution(p: Sequence[int]) -> Tuple[int, ...]:
    """Returns the number of elements of ``s^{-1}(p)`` with exactly ``m`` peaks for
    ``m = 0, ..., n - 1``.
    """
    return _distribution(p, "peaks")


def fertility_by_descents(p: Sequence[int], m: int) -> int:

    distribution = descent_distribution(p)
    return distribution[m] if 0 <= m < len(distribution) else 0


def fertility_by_peaks(p: Sequence[int], m: int) -> int:

    distribution = peak_distribution(p)
    return distribution[m] if 0 <= m < len(distribution) else 0


def _require_avoids(p: Sequence[int], basis: Sequence[str], operation: str):

    offending = [pattern for pattern in basis if contains(p, pattern)]

    if offending:
        raise PermutationError(
            f"{operation} requires a permutation avoiding {', '.join(basis)}, but "
            f"{Permutation(p)} contains {', '.join(offending)}."
        )


def layered_min_composition(p: Sequence[int]) -> Composition:
    """Returns the composition ``y`` such that the valid compositions of a
    permutation in ``Av(231, 312, 321)`` are exactly the ``q`` with ``y ⪯ q``.
    """

    _require_avoids(p, ("231", "312", "321"), "layered_min_composition")

    n = len(p)
    tops = descents(p)
    k = len(tops)

    if k == 0:
        return (n,)

    u = [d - index for index, d in enumerate(tops)]

    return (
        (u[0],)
        + tuple(u[i] - u[i - 1] for i in range(1, k))
        + (n - k - u[k - 1],)
    )


def layered_upset(p: Sequence[int]) -> List[Composition]:
    """The compositions ``q ∈ Comp_(k+1)(n - k)`` lying above
    ``layered_min_composition(p)``.
    """

    y = layered_min_composition(p)
    return [q for q in comp_set(len(y), sum(y)) if comp_leq(y, q)]


def phi_layered(p: Sequence[int]) -> Permutation:
    """Maps a permutation in ``Av(132, 312)`` to the layered permutation whose
    descending runs have the same lengths. The map is a bijection onto
    ``Av(231, 312)`` which preserves valid compositions.
    """

    _require_avoids(p, ("132", "312"), "phi_layered")
    return layered([end - start + 1 for start, end in descending_runs(p)])

