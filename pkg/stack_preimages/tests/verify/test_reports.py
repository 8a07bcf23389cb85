import pytest

from stack_preimages.permutations.perm import Permutation
from stack_preimages.verify.reports import FAIL, PARTIAL, PASS, CheckReport, format_value, witness


@pytest.mark.parametrize(
    "value, expected",
    [
        pytest.param(27, "27", id="count"),
        pytest.param(10 ** 30, "1" + "0" * 30, id="big count"),
        pytest.param(True, True, id="bool"),
        pytest.param(None, None, id="None"),
        pytest.param(Permutation((3, 1, 4, 2)), "3 1 4 2", id="permutation"),
        pytest.param((3, 1, 1), "(3,1,1)", id="composition"),
        pytest.param([(1, 2), 3], ["(1,2)", "3"], id="list"),
        pytest.param({"n": 4, 2: "x"}, {"n": "4", "2": "x"}, id="dict"),
        pytest.param("thm3", "thm3", id="text"),
    ],
)
def test_format_value(value, expected):
    assert format_value(value) == expected


def test_witness():
    assert witness(n=3, permutation=Permutation((2, 1))) == {"n": "3", "permutation": "2 1"}


def test_report_invariants():

    with pytest.raises(AssertionError):
        CheckReport(id="thm3", range="2<=n<=5", status="maybe")
    with pytest.raises(AssertionError):
        CheckReport(id="thm3", range="2<=n<=5", status=FAIL)
    with pytest.raises(AssertionError):
        CheckReport(id="thm3", range="2<=n<=5", status=PASS, witness={"n": "3"})


def test_report_to_dict():

    report = CheckReport(id="conj4", range="1<=n<=9", status=PARTIAL, millis=12)

    assert not report.failed
    assert report.to_dict() == {
        "id": "conj4",
        "range": "1<=n<=9",
        "status": "partial",
        "millis": 12,
    }
    assert "millis" not in report.to_dict(timing=False)

    report.details["m=4"] = [1, 2, 6]
    assert report.to_dict()["details"] == {"m=4": ["1", "2", "6"]}


def test_report_to_text():

    report = CheckReport(
        id="thm3", range="2<=n<=5", status=FAIL, witness={"n": "4"}, millis=3
    )

    assert report.failed
    assert report.to_text() == "thm3 [2<=n<=5] fail (3 ms)\n    n: 4"
    assert report.to_text(timing=False) == "thm3 [2<=n<=5] fail\n    n: 4"
