"""Runs a batch of theorem and conjecture checks."""
import logging
from typing import List, Optional, Sequence, Tuple

from stack_preimages.exceptions import UnknownIdentifierError
from stack_preimages.utilities import parallel_map
from stack_preimages.verify.checks import THEOREM_CHECKS
from stack_preimages.verify.conjectures import CONJECTURE_CHECKS
from stack_preimages.verify.reports import CheckReport

logger = logging.getLogger(__name__)


def _check_class(identifier: str) -> type:
    return THEOREM_CHECKS.get(identifier) or CONJECTURE_CHECKS[identifier]


def _run_check(arguments: Tuple[str, Optional[int]]) -> CheckReport:

    identifier, max_n = arguments
    return _check_class(identifier)(max_n).run()


def run_all(
    ids: Optional[Sequence[str]] = None, jobs: int = 1, max_n: Optional[int] = None
) -> List[CheckReport]:
    """Runs several checks, one per worker process, and returns their reports in the
    order the ids were given.

    Parameters
    ----------
    ids
        The theorem and / or conjecture ids to run. By default every theorem check.
    jobs
        The number of checks to run at once.
    max_n
        Overrides the default range of every check. ``None`` keeps each default.
    """

    ids = list(THEOREM_CHECKS) if ids is None else list(ids)

    for identifier in ids:

        if identifier not in THEOREM_CHECKS and identifier not in CONJECTURE_CHECKS:
            raise UnknownIdentifierError(
                "check", identifier, {**THEOREM_CHECKS, **CONJECTURE_CHECKS}
            )

        # Validates max_n.
        _check_class(identifier)(max_n)

    logger.info(f"running {len(ids)} checks with {jobs} worker(s)")

    return parallel_map(_run_check, [(identifier, max_n) for identifier in ids], jobs)
