from stack_preimages.verify.checks import (
    SET_EQUALITIES,
    THEOREM_CHECKS,
    Check,
    check_set_equality,
    verify_theorem,
)
from stack_preimages.verify.conjectures import CONJECTURE_CHECKS, check_conjecture
from stack_preimages.verify.growth import av321_growth_report
from stack_preimages.verify.reports import CheckReport
from stack_preimages.verify.runner import run_all
from stack_preimages.verify.sweeps import class_preimage_count, class_size, preimage_class

__all__ = [
    "CONJECTURE_CHECKS",
    "SET_EQUALITIES",
    "THEOREM_CHECKS",
    "Check",
    "CheckReport",
    "av321_growth_report",
    "check_conjecture",
    "check_set_equality",
    "class_preimage_count",
    "class_size",
    "preimage_class",
    "run_all",
    "verify_theorem",
]
