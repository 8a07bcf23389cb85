"""Open conjectures about preimage counts, checked exactly up to a budget. A check
which passes only establishes the conjecture within the range it swept.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional

from stack_preimages.enumeration.numbers import conj1_lhs, conj1_rhs
from stack_preimages.enumeration.series import is_log_concave, is_real_rooted, is_unimodal
from stack_preimages.exceptions import UnknownIdentifierError
from stack_preimages.hooks.vhc import descent_distribution
from stack_preimages.permutations.perm import Permutation
from stack_preimages.utilities import parallel_map
from stack_preimages.verify.checks import (
    Check,
    ClassFormulaCheck,
    Witness,
    first_mismatch,
    first_witness,
    gf_coefficient,
    sorted_candidates,
)
from stack_preimages.verify.reports import CheckReport, witness
from stack_preimages.verify.sweeps import class_preimage_count

logger = logging.getLogger(__name__)


class ConjectureCheck(Check):
    """A check whose sweep is bounded by a budget rather than by a proof. Its report
    is partial when the budget stops short of ``target_max_n``.
    """

    #: The largest ``n`` the check aims to cover.
    target_max_n: Optional[int] = None

    def is_complete(self) -> bool:
        return self.target_max_n is None or self.max_n >= self.target_max_n


class Conjecture1Check(ConjectureCheck):
    """``sum C_q D_q`` over ``Comp_{k+1}(n - k)`` equals
    ``C(n - k - 1, k) C(2n - 2k, n) / (n + 1)``.
    """

    id = "conj1"
    default_max_n = 12
    max_n_cap = 16

    def _evaluate(self) -> Witness:

        return first_mismatch(
            ({"n": n, "k": k}, conj1_rhs(n, k), Fraction(conj1_lhs(n, k)))
            for n in self.n_values
            for k in range(n)
        )


class Conjecture2Check(ConjectureCheck, ClassFormulaCheck):
    """``Av(132, 312)`` and ``Av(132, 231)`` have the same number of preimages,
    counted by the coefficients of ``(1 - 2x - sqrt(1 - 4x - 4x^2)) / (4x)``.
    """

    id = "conj2"
    default_max_n = 9
    max_n_cap = 11

    bases = (("132", "312"), ("132", "231"))
    formulas = (("total", None, gf_coefficient("conj2")),)


class Conjecture5Check(ConjectureCheck, ClassFormulaCheck):
    """The preimages of ``Av(231, 321)`` are counted by ``1 / (1 - x C(x C(x)))``."""

    id = "conj5"
    min_n = 0
    default_max_n = 9
    max_n_cap = 11

    bases = (("231", "321"),)
    formulas = (("total", None, gf_coefficient("conj5")),)


def _descent_polynomial_violation(p: Permutation) -> Witness:
    """Checks that the descent polynomial of ``s^{-1}(p)`` is real-rooted, and that
    its coefficients are then log-concave and unimodal in turn.
    """

    distribution = descent_distribution(p)

    if not any(distribution):
        return None

    for name, holds in (
        ("real-rooted", is_real_rooted),
        ("log-concave", is_log_concave),
        ("unimodal", is_unimodal),
    ):

        if not holds(distribution):
            return witness(permutation=p, descent_polynomial=distribution, violates=name)

    return None


class Conjecture3Check(ConjectureCheck):
    """The descent polynomial of every fibre ``s^{-1}(p)`` is real-rooted. Since its
    coefficients are non-negative, it is then also log-concave and unimodal, and both
    are checked as well.
    """

    id = "conj3"
    default_max_n = 7
    max_n_cap = 8

    def _evaluate(self) -> Witness:

        return first_witness(
            first_witness(
                parallel_map(
                    _descent_polynomial_violation, list(sorted_candidates(n)), self.jobs
                )
            )
            for n in self.n_values
        )


class Conjecture4Check(ConjectureCheck):
    """The sequence ``|s^{-1}(Av_n(12...m))|`` is unimodal in ``n``.

    ``m = 4`` is swept over its whole support ``n < 8``; the budget bounds the sweep
    for ``m = 5``, whose support runs to ``n = 15``.
    """

    id = "conj4"
    default_max_n = 10
    max_n_cap = 12

    complete_length = 4
    partial_length = 5

    target_max_n = 2 ** (partial_length - 1) - 1

    def range_text(self) -> str:

        full = 2 ** (self.complete_length - 1) - 1
        return (
            f"m={self.complete_length}: 1<=n<={full}; "
            f"m={self.partial_length}: 1<=n<={self.max_n}"
        )

    def _sequence(self, m: int, max_n: int) -> List[int]:

        pattern = "".join(str(value) for value in range(1, m + 1))

        return [
            class_preimage_count((pattern,), n, jobs=self.jobs)
            for n in range(1, max_n + 1)
        ]

    def _evaluate(self) -> Witness:

        for m, max_n in (
            (self.complete_length, 2 ** (self.complete_length - 1) - 1),
            (self.partial_length, self.max_n),
        ):

            sequence = self._sequence(m, max_n)
            self.details[f"m={m}"] = sequence

            if not is_unimodal(sequence):
                return witness(m=m, sequence=sequence)

        return None


CONJECTURE_CHECKS: Dict[str, type] = {
    check.id: check
    for check in (
        Conjecture1Check,
        Conjecture2Check,
        Conjecture3Check,
        Conjecture4Check,
        Conjecture5Check,
    )
}


def check_conjecture(
    identifier: str, budget: Optional[int] = None, jobs: int = 1
) -> CheckReport:
    """Checks one of the conjectures in ``CONJECTURE_CHECKS`` for every ``n`` up to
    ``budget`` (by default the check's own ``default_max_n``).
    """

    if identifier not in CONJECTURE_CHECKS:
        raise UnknownIdentifierError("conjecture", identifier, CONJECTURE_CHECKS)

    return CONJECTURE_CHECKS[identifier](budget, jobs).run()


def conjecture_ids() -> List[str]:
    return list(CONJECTURE_CHECKS)
