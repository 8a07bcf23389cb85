"""Checks which compare the preimage counts computed from valid hook configurations
against closed forms, generating functions, the brute force image oracle and the
known descriptions of preimage classes.
"""
import abc
import itertools
import logging
from collections import Counter
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from stack_preimages.enumeration.numbers import (
    av321_by_descents,
    baxter,
    catalan,
    comp_set,
    conj1_lhs,
    eq12,
    eq12_total,
    eq13,
    fine,
    g_refined,
    h_refined,
    thm3,
    thm3_descents,
    thm3_peaks,
    thm9,
    thm10,
    thm10_descents,
    thm16,
    thm16_descents,
    thm16_peaks,
    vee,
    w2,
)
from stack_preimages.enumeration.series import gf_coefficients
from stack_preimages.exceptions import (
    CapExceededError,
    InvalidInputError,
    UnknownIdentifierError,
)
from stack_preimages.hooks.vhc import (
    canonical_vhc,
    compositions_by_enumeration,
    descent_distribution,
    fertility,
    layered_upset,
    peak_distribution,
    phi_layered,
    valid_compositions,
)
from stack_preimages.permutations.patterns import (
    PatternLike,
    av_n,
    av_n_ending_in_max,
    avoids_all,
    contains,
    contains_bruteforce,
)
from stack_preimages.permutations.perm import (
    Permutation,
    all_permutations,
    descents,
    direct_sum,
    identity,
    theta,
)
from stack_preimages.permutations.stacksort import (
    ORACLE_CAP,
    PREIMAGE_CAP,
    image_multiset,
    image_statistics,
    is_t_sortable,
    preimages,
    pushpop_word,
    sort_once,
    sort_recursive,
)
from stack_preimages.utilities import parallel_map, timed
from stack_preimages.verify.reports import FAIL, PARTIAL, PASS, CheckReport, witness
from stack_preimages.verify.sweeps import class_preimage_count, preimage_class

logger = logging.getLogger(__name__)

Witness = Optional[Dict[str, Any]]
Case = Tuple[Dict[str, Any], Any, Any]


def first_mismatch(cases: Iterable[Case]) -> Witness:
    """Returns a witness for the first ``(parameters, expected, actual)`` case whose
    two values differ, or ``None`` if they all agree. ``cases`` is consumed lazily
    so that a sweep stops at its first failure.
    """

    for parameters, expected, actual in cases:

        if expected != actual:
            return witness(**parameters, expected=expected, actual=actual)

    return None


def first_witness(witnesses: Iterable[Witness]) -> Witness:
    return next((value for value in witnesses if value is not None), None)


def sorted_candidates(n: int) -> Iterator[Permutation]:
    """The elements of ``S_n`` ending in ``n``, the only ones with preimages."""

    for p in all_permutations(n - 1):
        yield Permutation(p + (n,))


class Check(abc.ABC):
    """The base class for checks which sweep ``n`` over a range, comparing two
    independently computed quantities at each step.

    Subclasses set the ``id`` of the check and may override the default range.
    """

    id: str = None

    #: The smallest ``n`` swept.
    min_n = 1
    #: The largest ``n`` swept when no other value is requested.
    default_max_n = 8
    #: The largest ``n`` the check may be asked to sweep.
    max_n_cap = 10

    def __init__(self, max_n: Optional[int] = None, jobs: int = 1):

        max_n = self.default_max_n if max_n is None else max_n

        if max_n > self.max_n_cap:
            raise CapExceededError(f"the {self.id} check", max_n, self.max_n_cap)
        if max_n < self.min_n:
            raise InvalidInputError(
                f"the {self.id} check starts at n={self.min_n}, got max_n={max_n}."
            )

        self.max_n = max_n
        self.jobs = jobs

        self.details: Dict[str, Any] = {}

    @property
    def n_values(self) -> range:
        return range(self.min_n, self.max_n + 1)

    def range_text(self) -> str:
        return f"{self.min_n}<=n<={self.max_n}"

    def is_complete(self) -> bool:
        """Whether the sweep covers everything the check aims to cover."""
        return True

    @abc.abstractmethod
    def _evaluate(self) -> Witness:
        """Performs the sweep.

        Returns
        -------
            The witness of the first failure, or ``None`` if every case agreed.
        """
        raise NotImplementedError()

    def run(self) -> CheckReport:

        self.details = {}

        with timed(f"{self.id} check up to n={self.max_n}") as timer:
            failure = self._evaluate()

        if failure is not None:
            status = FAIL
            logger.info(f"{self.id} failed: {failure}")
        else:
            status = PASS if self.is_complete() else PARTIAL

        return CheckReport(
            id=self.id,
            range=self.range_text(),
            status=status,
            witness=failure,
            millis=timer.millis,
            details=self.details,
        )


Formula = Tuple[str, Optional[str], Callable[..., int]]


def gf_coefficient(name: str) -> Callable[[int], int]:
    """The map ``n -> [x^n]`` of a named generating function."""

    def coefficient(n: int) -> int:
        return gf_coefficients(name, max(n, 1))[n]

    return coefficient


class ClassFormulaCheck(Check, abc.ABC):
    """Compares the number of preimages of one or more permutation classes, in total
    or refined by descents or peaks, against formulas in ``n`` (and ``m``).

    ``formulas`` holds ``(label, refinement, formula)`` triples. A formula for the
    total takes ``n``; a refined formula takes ``(n, m)`` and is compared for every
    ``0 <= m < n``.
    """

    bases: Tuple[Tuple[str, ...], ...] = ()
    formulas: Tuple[Formula, ...] = ()

    def _cases(self, basis: Sequence[PatternLike], n: int) -> Iterator[Case]:

        for label, refine, formula in self.formulas:

            actual = class_preimage_count(basis, n, refine=refine, jobs=self.jobs)

            if refine is None:
                expected = formula(n)
            else:
                expected = tuple(formula(n, m) for m in range(max(n, 1)))

            yield {"basis": ",".join(basis), "n": n, "statistic": label}, expected, actual

    def _evaluate(self) -> Witness:

        return first_mismatch(
            case
            for n in self.n_values
            for basis in self.bases
            for case in self._cases(basis, n)
        )


class Theorem3Check(ClassFormulaCheck):

    id = "thm3"
    min_n = 2
    default_max_n = 10
    max_n_cap = 13

    bases = (("132", "231", "312", "321"),)
    formulas = (
        ("total", None, thm3),
        ("descents", "descents", thm3_descents),
        ("peaks", "peaks", thm3_peaks),
    )


class Theorem9Check(ClassFormulaCheck):

    id = "thm9"
    default_max_n = 10
    max_n_cap = 12

    bases = (("231", "312", "321"),)
    formulas = (("total", None, thm9),)


class Theorem11Check(ClassFormulaCheck):
    """The preimages of ``Av_n(132, 231, 312)`` are counted by the Fine number
    ``F_(n+1)``.
    """

    id = "thm11"
    default_max_n = 10
    max_n_cap = 13

    bases = (("132", "231", "312"),)
    formulas = (("total", None, lambda n: fine(n + 1)),)


class FineRefinementsCheck(ClassFormulaCheck):

    id = "fine_refinements"
    default_max_n = 10
    max_n_cap = 13

    bases = Theorem11Check.bases
    formulas = (
        ("descents", "descents", g_refined),
        ("peaks", "peaks", h_refined),
    )


_SIGMA_CLASS = ("132", "231", "321")
_GAMMA_CLASS = ("132", "312", "321")


class Theorem16Check(ClassFormulaCheck):

    id = "thm16"
    default_max_n = 10
    max_n_cap = 12

    bases = (_SIGMA_CLASS, _GAMMA_CLASS)
    formulas = (("total", None, thm16),)


class Theorem16DescentsCheck(Theorem16Check):

    id = "thm16_descents"
    formulas = (("descents", "descents", thm16_descents),)


class Theorem16PeaksCheck(Theorem16Check):

    id = "thm16_peaks"
    formulas = (("peaks", "peaks", thm16_peaks),)


class Theorem17Check(ClassFormulaCheck):
    """The preimages of ``Av_n(312, 321)`` are counted by the large Schröder numbers."""

    id = "thm17"
    default_max_n = 9
    max_n_cap = 11

    bases = (("312", "321"),)
    formulas = (("total", None, gf_coefficient("schroeder")),)


class Equation12Check(ClassFormulaCheck):

    id = "eq12"
    default_max_n = 10
    max_n_cap = 12

    bases = (("132", "321"),)
    formulas = (
        ("total", None, eq12_total),
        ("generating function", None, gf_coefficient("av132_321")),
        ("descents", "descents", eq12),
    )


class Equation13Check(ClassFormulaCheck):

    id = "eq13"
    default_max_n = 10
    max_n_cap = 12

    bases = (("132", "321"),)
    formulas = (("peaks", "peaks", eq13),)


class TwoStackSortableCountCheck(ClassFormulaCheck):
    """The 2-stack-sortable permutations are the preimages of ``Av(231)``."""

    id = "w2"
    max_n_cap = 11

    bases = (("231",),)
    formulas = (("total", None, w2),)


class BaxterCheck(ClassFormulaCheck):

    id = "baxter"
    max_n_cap = 11

    bases = (("312",),)
    formulas = (("total", None, baxter),)


class Theorem15Check(Check):
    """The descent and peak refined preimage counts of ``Av_n(132, 231, 321)`` and
    ``Av_n(132, 312, 321)`` agree.
    """

    id = "thm15"
    default_max_n = 9
    max_n_cap = 12

    def _evaluate(self) -> Witness:

        return first_mismatch(
            (
                {"n": n, "statistic": refine},
                class_preimage_count(_SIGMA_CLASS, n, refine=refine, jobs=self.jobs),
                class_preimage_count(_GAMMA_CLASS, n, refine=refine, jobs=self.jobs),
            )
            for n in self.n_values
            for refine in ("descents", "peaks")
        )


class Theorem10Check(Check):
    """Checks the fertility of ``theta_{n,k}``, its descent refinement and that every
    composition of ``n - k`` into ``k + 1`` parts is valid for it.
    """

    id = "thm10"
    default_max_n = 9
    max_n_cap = 11

    def _cases(self, n: int, k: int) -> Iterator[Case]:

        p = theta(n, k)
        parameters = {"n": n, "k": k}

        yield {**parameters, "statistic": "total"}, thm10(n, k), fertility(p)
        yield (
            {**parameters, "statistic": "descents"},
            tuple(thm10_descents(n, k, m) for m in range(n)),
            descent_distribution(p),
        )
        yield (
            {**parameters, "statistic": "valid compositions"},
            comp_set(k + 1, n - k),
            valid_compositions(p),
        )

    def _evaluate(self) -> Witness:

        return first_mismatch(
            case for n in self.n_values for k in range(n) for case in self._cases(n, k)
        )


def _bound_violation(p: Permutation) -> Witness:

    n, k = len(p), len(descents(p))
    bound = thm10(n, k)
    value = fertility(p)

    if value > bound:
        return witness(permutation=p, statistic="total", bound=bound, actual=value)

    for m, value in enumerate(descent_distribution(p)):

        bound = thm10_descents(n, k, m)

        if value > bound:
            return witness(permutation=p, statistic="descents", m=m, bound=bound, actual=value)

    return None


class Theorem14BoundsCheck(Check):
    """The fertility of a permutation with ``k`` descents, and the number of its
    preimages with ``m`` descents, never exceed those of ``theta_{n,k}``.
    """

    id = "thm14_bounds"
    max_n_cap = 9

    def _evaluate(self) -> Witness:

        return first_witness(
            first_witness(
                parallel_map(_bound_violation, list(sorted_candidates(n)), self.jobs)
            )
            for n in self.n_values
        )


class Equation8Check(Check):
    """Both refinements of the Fine numbers sum to ``F_(n+1)``."""

    id = "eq8"
    default_max_n = 20
    max_n_cap = 30

    def _evaluate(self) -> Witness:

        return first_mismatch(
            (
                {"n": n, "statistic": name},
                fine(n + 1),
                sum(refinement(n, m) for m in range(n)),
            )
            for n in self.n_values
            for name, refinement in (("descents", g_refined), ("peaks", h_refined))
        )


class Equation14Check(Check):
    """Counts ``Av_{n,k}(321)`` exhaustively."""

    id = "eq14"
    default_max_n = 9
    max_n_cap = 11

    def _cases(self, n: int) -> Iterator[Case]:

        by_descents = Counter(len(descents(p)) for p in av_n(("321",), n))

        for k in range(n):
            yield {"n": n, "k": k}, av321_by_descents(n, k), by_descents[k]

    def _evaluate(self) -> Witness:
        return first_mismatch(case for n in self.n_values for case in self._cases(n))


class OracleCheck(Check):
    """Every fertility computed from valid compositions agrees with the number of
    elements of ``S_n`` that sort to it.
    """

    id = "oracle"
    max_n_cap = ORACLE_CAP

    def _cases(self, n: int) -> Iterator[Case]:

        images = image_multiset(n, self.jobs)
        permutations = list(all_permutations(n))

        for p, value in zip(permutations, parallel_map(fertility, permutations, self.jobs)):
            yield {"permutation": p}, images.get(p, 0), value

    def _evaluate(self) -> Witness:
        return first_mismatch(case for n in self.n_values for case in self._cases(n))


def _uniqueness_violation(p: Permutation) -> Witness:

    induced = compositions_by_enumeration(p)
    valid = valid_compositions(p)

    if len(set(induced)) != len(induced):

        repeated = next(q for q, count in Counter(induced).items() if count > 1)
        return witness(permutation=p, repeated_composition=repeated)

    if set(induced) != set(valid):
        return witness(permutation=p, enumerated=sorted(induced), characterized=valid)

    if (canonical_vhc(p) is None) != (len(induced) == 0):
        return witness(permutation=p, n_configurations=len(induced))

    return None


class Theorem6Check(Check):
    """Distinct valid hook configurations induce distinct compositions, and the
    compositions they induce are exactly those characterized by the canonical data.
    """

    id = "thm6"
    max_n_cap = 9

    def _evaluate(self) -> Witness:

        return first_witness(
            first_witness(
                parallel_map(_uniqueness_violation, list(all_permutations(n)), self.jobs)
            )
            for n in self.n_values
        )


class Theorem7Check(Check):
    """The refined fertilities agree with the oracle bucketed by the descents and
    peaks of each preimage, and the peak refinement of ``s^{-1}(12...n)`` is
    ``V(n, m + 1)``.
    """

    id = "thm7"
    max_n_cap = ORACLE_CAP

    def _cases(self, n: int) -> Iterator[Case]:

        empty = (0,) * n

        for statistic, distribution in (
            ("descents", descent_distribution),
            ("peaks", peak_distribution),
        ):

            oracle = image_statistics(n, statistic)

            for p in all_permutations(n):
                yield {"permutation": p, "statistic": statistic}, oracle.get(
                    p, empty
                ), distribution(p)

        row = tuple(vee(n, m + 1) for m in range(n))

        yield {"n": n, "statistic": "identity peaks"}, row, peak_distribution(identity(n))
        yield {"n": n, "statistic": "peak table row sum"}, catalan(n), sum(row)

    def _evaluate(self) -> Witness:
        return first_mismatch(case for n in self.n_values for case in self._cases(n))


class Theorem8Check(Check):
    """The valid compositions of a layered permutation in ``Av(231, 312, 321)`` form
    an upset, and summing over the class gives ``sum C_q D_q``.
    """

    id = "thm8"
    default_max_n = 9
    max_n_cap = 11

    basis = ("231", "312", "321")

    def _cases(self, n: int) -> Iterator[Case]:

        for p in av_n_ending_in_max(self.basis, n):
            yield {"permutation": p}, valid_compositions(p), layered_upset(p)

        for k in range(n):
            yield (
                {"n": n, "k": k},
                conj1_lhs(n, k),
                class_preimage_count(self.basis, n, k=k, jobs=self.jobs),
            )

    def _evaluate(self) -> Witness:
        return first_mismatch(case for n in self.n_values for case in self._cases(n))


class Theorem12Check(Check):
    """The map sending a permutation of ``Av(132, 312)`` to the layered permutation
    with the same descending run lengths is a bijection onto ``Av(231, 312)`` which
    preserves valid compositions, so both classes have the same refined counts.
    """

    id = "thm12"

    source = ("132", "312")
    target = ("231", "312")

    def _cases(self, n: int) -> Iterator[Case]:

        images = []

        for p in av_n(self.source, n):

            image = phi_layered(p)
            images.append(image)

            yield {"permutation": p, "image": image}, valid_compositions(
                p
            ), valid_compositions(image)

        yield {"n": n, "statistic": "image"}, av_n(self.target, n), sorted(images)

        for refine in ("descents", "peaks"):
            yield (
                {"n": n, "statistic": refine},
                class_preimage_count(self.target, n, refine=refine, jobs=self.jobs),
                class_preimage_count(self.source, n, refine=refine, jobs=self.jobs),
            )

    def _evaluate(self) -> Witness:
        return first_mismatch(case for n in self.n_values for case in self._cases(n))


class DirectSumCheck(Check):
    """``s(sigma ⊕ mu) = s(sigma) ⊕ s(mu)``, swept over ``|sigma| + |mu| <= max_n``."""

    id = "direct_sum"
    min_n = 2
    max_n_cap = 9

    def _cases(self, n: int) -> Iterator[Case]:

        for a in range(1, n):
            for sigma, mu in itertools.product(all_permutations(a), all_permutations(n - a)):
                yield {"sigma": sigma, "mu": mu}, direct_sum(
                    sort_once(sigma), sort_once(mu)
                ), sort_once(direct_sum(sigma, mu))

    def _evaluate(self) -> Witness:
        return first_mismatch(case for n in self.n_values for case in self._cases(n))


class FertilityBoundCheck(Check):
    """Listing each fibre ``s^{-1}(p)`` gives ``fertility(p)`` elements with distinct
    push / pop words, so that no fibre has more than ``4^n`` elements.
    """

    id = "fertility_bound"
    default_max_n = 7
    max_n_cap = PREIMAGE_CAP

    def _violation(self, p: Permutation) -> Witness:

        fibre = preimages(p)
        words = {pushpop_word(sigma) for sigma in fibre}

        if len(fibre) != fertility(p):
            return witness(permutation=p, listed=len(fibre), fertility=fertility(p))
        if len(words) != len(fibre):
            return witness(permutation=p, fibre=len(fibre), distinct_words=len(words))
        if len(fibre) > 4 ** len(p):
            return witness(permutation=p, fibre=len(fibre), bound=4 ** len(p))

        return None

    def _evaluate(self) -> Witness:

        return first_witness(
            self._violation(p) for n in self.n_values for p in sorted_candidates(n)
        )


class IncreasingEmptyCheck(Check):
    """``s^{-1}(Av_n(12...m))`` is empty exactly when ``n >= 2^(m-1)``."""

    id = "increasing_empty"
    default_max_n = 9
    max_n_cap = 11

    lengths = (2, 3, 4)

    def _evaluate(self) -> Witness:

        return first_mismatch(
            (
                {"pattern": pattern, "n": n},
                n >= 2 ** (m - 1),
                class_preimage_count((pattern,), n, jobs=self.jobs) == 0,
            )
            for m, pattern in (
                (m, "".join(str(value) for value in range(1, m + 1)))
                for m in self.lengths
            )
            for n in self.n_values
        )


class Theorem1Check(Check):
    """A permutation is sorted by one pass through the stack exactly when it avoids
    ``231``.
    """

    id = "thm1"
    max_n_cap = 9

    def _evaluate(self) -> Witness:

        return first_mismatch(
            ({"permutation": p}, not contains(p, "231"), is_t_sortable(p, 1))
            for n in self.n_values
            for p in all_permutations(n)
        )


class TwoStackCheck(Check):
    """A permutation is sorted by two passes through the stack exactly when it avoids
    ``2341`` and ``3[5]241``, and there are ``W_2(n)`` of them.
    """

    id = "two_stack"
    max_n_cap = 9

    basis = ("2341", "3[5]241")

    def _cases(self, n: int) -> Iterator[Case]:

        sortable = 0

        for p in all_permutations(n):

            value = is_t_sortable(p, 2)
            sortable += value

            yield {"permutation": p}, avoids_all(p, self.basis), value

        yield {"n": n}, w2(n), sortable

    def _evaluate(self) -> Witness:
        return first_mismatch(case for n in self.n_values for case in self._cases(n))


#: The identities ``s^{-1}(Av(lhs)) = Av(rhs)`` checked by ``set_equality``.
SET_EQUALITIES: Tuple[Tuple[Tuple[str, ...], Tuple[str, ...]], ...] = (
    (("21",), ("231",)),
    (("213",), ("231",)),
    (("231",), ("2341", "3[5]241")),
    (("132", "231", "312", "321"), ("1342", "2341", "3142", "3241", "3412", "3421")),
    (("132", "231", "321"), ("1342", "2341", "3241", "45231", "3[5]142")),
    (("132", "312", "321"), ("1342", "3142", "3412", "3421")),
    (("231", "312", "321"), ("2341", "3241", "3412", "3421")),
    (("132", "231", "312"), ("2341", "3412", "1342", "3142", "34(21)", "(32)41")),
    (("312", "321"), ("3412", "3421")),
    (("132", "321"), ("1342", "34251", "35241", "45231", "(31)42")),
    (("132", "312"), ("1342", "3142", "3412", "34(21)")),
    (("231", "312"), ("2341", "3412", "34(21)", "3[5]241")),
    (("321",), ("34251", "35241", "45231")),
)


def set_equality_id(lhs: Sequence[str], rhs: Sequence[str]) -> str:
    return f"s^-1(Av({','.join(lhs)}))=Av({','.join(rhs)})"


def _confirmed_witness(
    sigma: Permutation, lhs: Sequence[PatternLike], rhs: Sequence[PatternLike]
) -> Dict[str, Any]:
    """Re-derives membership of ``sigma`` on both sides with the slow definitional
    paths before it is reported.
    """

    image = sort_recursive(sigma)

    in_lhs = not any(contains_bruteforce(image, t) for t in lhs)
    in_rhs = not any(contains_bruteforce(sigma, t) for t in rhs)

    assert in_lhs != in_rhs, (
        f"{sigma} was reported as a counterexample but the definitional containment "
        f"tests place it on both sides or neither"
    )

    return witness(
        permutation=sigma, image=image, image_in_class=in_lhs, in_preimage_class=in_rhs
    )


def check_set_equality(
    lhs: Sequence[PatternLike],
    rhs: Sequence[PatternLike],
    n_max: int = PREIMAGE_CAP,
    identifier: Optional[str] = None,
) -> CheckReport:
    """Checks that ``s^{-1}(Av_n(lhs)) = Av_n(rhs)`` for every ``1 <= n <= n_max``.

    Parameters
    ----------
    lhs
        The basis whose preimage class is computed.
    rhs
        The claimed basis of the preimage class, which may include barred and
        vincular patterns.
    n_max
        The largest length compared.
    identifier
        The id of the report, by default built from the two bases.
    """

    if n_max > PREIMAGE_CAP:
        raise CapExceededError("a set equality check", n_max, PREIMAGE_CAP)

    identifier = identifier or set_equality_id(
        [str(t) for t in lhs], [str(t) for t in rhs]
    )

    failure = None

    with timed(f"set equality {identifier} up to n={n_max}") as timer:

        for n in range(1, n_max + 1):

            difference = sorted(set(preimage_class(lhs, n)) ^ set(av_n(rhs, n)))

            if difference:
                failure = _confirmed_witness(difference[0], lhs, rhs)
                break

    return CheckReport(
        id=identifier,
        range=f"1<=n<={n_max}",
        status=PASS if failure is None else FAIL,
        witness=failure,
        millis=timer.millis,
    )


class SetEqualityCheck(Check):
    """Checks every identity in ``SET_EQUALITIES``."""

    id = "set_equality"
    max_n_cap = PREIMAGE_CAP

    identities = SET_EQUALITIES

    def _evaluate(self) -> Witness:

        for lhs, rhs in self.identities:

            report = check_set_equality(lhs, rhs, self.max_n)
            self.details[report.id] = report.status

            if report.failed:
                return {"identity": report.id, **report.witness}

        return None


THEOREM_CHECKS: Dict[str, type] = {
    check.id: check
    for check in (
        Theorem3Check,
        Theorem9Check,
        Theorem10Check,
        Theorem11Check,
        Theorem15Check,
        Theorem16Check,
        Theorem16DescentsCheck,
        Theorem16PeaksCheck,
        Theorem17Check,
        Equation14Check,
        TwoStackSortableCountCheck,
        BaxterCheck,
        FineRefinementsCheck,
        Theorem14BoundsCheck,
        Equation8Check,
        OracleCheck,
        Theorem6Check,
        Theorem7Check,
        Theorem12Check,
        Equation12Check,
        Equation13Check,
        Theorem8Check,
        DirectSumCheck,
        FertilityBoundCheck,
        IncreasingEmptyCheck,
        Theorem1Check,
        TwoStackCheck,
        SetEqualityCheck,
    )
}


def verify_theorem(identifier: str, max_n: Optional[int] = None, jobs: int = 1) -> CheckReport:
    """Runs one of the checks in ``THEOREM_CHECKS``.

    Parameters
    ----------
    identifier
        The id of the check, e.g. ``thm10``.
    max_n
        The largest ``n`` to sweep, by default the check's ``default_max_n``.
    jobs
        The number of worker processes available to the check.
    """

    if identifier not in THEOREM_CHECKS:
        raise UnknownIdentifierError("theorem", identifier, THEOREM_CHECKS)

    return THEOREM_CHECKS[identifier](max_n, jobs).run()


def theorem_ids() -> List[str]:
    return list(THEOREM_CHECKS)
