import pytest

from stack_preimages.exceptions import CapExceededError, UnknownIdentifierError
from stack_preimages.verify.reports import PASS
from stack_preimages.verify.runner import run_all


@pytest.mark.parametrize("jobs", [1, 2])
def test_run_all(jobs):

    reports = run_all(["thm1", "conj1", "eq8"], jobs=jobs, max_n=5)

    assert [report.id for report in reports] == ["thm1", "conj1", "eq8"]
    assert all(report.status == PASS for report in reports)
    assert all(report.range == "1<=n<=5" for report in reports)


def test_run_all_unknown():

    with pytest.raises(UnknownIdentifierError, match="unknown check 'thm99'"):
        run_all(["thm1", "thm99"])


@pytest.mark.parametrize("jobs", [1, 2])
def test_run_all_cap(jobs):

    with pytest.raises(CapExceededError, match="capped at n="):
        run_all(jobs=jobs, max_n=10)
