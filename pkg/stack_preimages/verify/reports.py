"""The report emitted by every theorem, identity and conjecture check."""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from stack_preimages.permutations.perm import Permutation, format_permutation

PASS = "pass"
FAIL = "fail"
PARTIAL = "partial"

STATUSES = (PASS, FAIL, PARTIAL)


def format_value(value: Any) -> Any:
    """Converts a value into the form it takes in a report payload.

    Counts become decimal strings so that no consumer truncates them, permutations
    use their text form and compositions their parenthesised form, e.g. ``(3,1,1)``.
    """

    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Permutation):
        return format_permutation(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, tuple) and all(isinstance(part, int) for part in value):
        return "(" + ",".join(str(part) for part in value) + ")"
    if isinstance(value, dict):
        return {str(key): format_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [format_value(item) for item in value]

    return str(value)


def witness(**values: Any) -> Dict[str, Any]:
    """Builds the witness of a failed check from named values."""
    return {key: format_value(value) for key, value in values.items()}


@dataclass
class CheckReport:
    """The outcome of a single check.

    Attributes
    ----------
    id
        The identifier of the check, e.g. ``thm10``.
    range
        The parameter range that was swept, e.g. ``1<=n<=9``.
    status
        ``pass``, ``fail``, or ``partial`` when the sweep stopped short of the range
        the check targets.
    witness
        The first counterexample found, present if and only if the check failed.
    millis
        The wall time of the check in milliseconds.
    details
        Additional, check specific, summary data.
    """

    id: str
    range: str
    status: str
    witness: Optional[Dict[str, Any]] = None
    millis: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):

        assert self.status in STATUSES, f"unknown status {self.status}"
        assert (self.status == FAIL) == (
            self.witness is not None
        ), "a report carries a witness exactly when it failed"

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:

        payload: Dict[str, Any] = {"id": self.id, "range": self.range, "status": self.status}

        if self.witness is not None:
            payload["witness"] = self.witness
        if timing and self.millis is not None:
            payload["millis"] = self.millis
        if self.details:
            payload["details"] = format_value(self.details)

        return payload

    def to_text(self, timing: bool = True) -> str:

        line = f"{self.id} [{self.range}] {self.status}"

        if timing and self.millis is not None:
            line += f" ({self.millis} ms)"

        lines = [line]

        if self.witness is not None:
            lines.extend(f"    {key}: {value}" for key, value in self.witness.items())

        return "\n".join(lines)
