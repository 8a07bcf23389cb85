"""Exact finite ``n`` data on the growth of ``|s^{-1}(Av_n(321))|``."""
import logging
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Iterator, List

from stack_preimages.enumeration.numbers import catalan, thm13_upper
from stack_preimages.exceptions import CapExceededError
from stack_preimages.utilities import timed
from stack_preimages.verify.checks import Case, first_mismatch
from stack_preimages.verify.reports import FAIL, PASS, CheckReport
from stack_preimages.verify.sweeps import class_preimage_count

logger = logging.getLogger(__name__)

#: The largest ``n`` the growth table may be computed to.
GROWTH_CAP = 11

#: ``|s^{-1}(Av_n(321))| <= |Av_n(321)| 4^n <= 16^n``.
TRIVIAL_RATE = 16


@dataclass(frozen=True)
class GrowthRow:

    n: int
    count: int
    #: ``count^(1/n)`` rounded to four decimal places, for display only.
    root: str


@dataclass
class GrowthReport:

    rows: List[GrowthRow]
    report: CheckReport


def nth_root_text(value: int, n: int, places: int = 4) -> str:
    """Formats ``value^(1/n)`` as a decimal string with ``places`` decimal places."""

    with localcontext() as context:

        context.prec = 40
        root = Decimal(value) ** (Decimal(1) / Decimal(n))

        return str(root.quantize(Decimal(1).scaleb(-places)))


def _cases(counts: List[int]) -> Iterator[Case]:

    for n, count in enumerate(counts, start=1):

        yield {"n": n, "bound": "C_n <= a_n"}, True, catalan(n) <= count
        yield {"n": n, "bound": "a_n <= 16^n"}, True, count <= TRIVIAL_RATE ** n
        yield {"n": n, "bound": "a_n <= sum_k thm10(n, k) |Av_n,k(321)|"}, True, (
            count <= thm13_upper(n)
        )

    for total in range(2, len(counts) + 1):
        for m in range(1, total):
            yield (
                {"m": m, "n": total - m, "bound": "a_m a_n <= a_(m+n)"},
                True,
                counts[m - 1] * counts[total - m - 1] <= counts[total - 1],
            )


def av321_growth_report(n_max: int = GROWTH_CAP, jobs: int = 1) -> GrowthReport:
    """Computes ``a_n = |s^{-1}(Av_n(321))|`` exactly for ``1 <= n <= n_max`` and
    checks the finite ``n`` bounds on them: ``C_n <= a_n <= 16^n``, the bound obtained
    by summing the largest fertility over ``Av_{n,k}(321)``, and supermultiplicativity
    on every computed pair.
    """

    if n_max > GROWTH_CAP:
        raise CapExceededError("the 321 growth report", n_max, GROWTH_CAP)

    with timed(f"321 growth report up to n={n_max}") as timer:

        counts = [class_preimage_count(("321",), n, jobs=jobs) for n in range(1, n_max + 1)]
        failure = first_mismatch(_cases(counts))

    rows = [
        GrowthRow(n, count, nth_root_text(count, n))
        for n, count in enumerate(counts, start=1)
    ]

    report = CheckReport(
        id="growth321",
        range=f"1<=n<={n_max}",
        status=PASS if failure is None else FAIL,
        witness=failure,
        millis=timer.millis,
    )

    return GrowthReport(rows, report)
