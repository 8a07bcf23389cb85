import pytest

from stack_preimages.exceptions import CapExceededError, UnknownIdentifierError
from stack_preimages.verify import conjectures
from stack_preimages.verify.conjectures import (
    CONJECTURE_CHECKS,
    Conjecture1Check,
    check_conjecture,
    conjecture_ids,
)
from stack_preimages.verify.reports import FAIL, PARTIAL, PASS


@pytest.mark.parametrize(
    "identifier, budget",
    [
        pytest.param("conj1", 10, id="conj1"),
        pytest.param("conj2", 6, id="conj2"),
        pytest.param("conj3", 6, id="conj3"),
        pytest.param("conj5", 6, id="conj5"),
    ],
)
def test_conjectures(identifier, budget):

    report = check_conjecture(identifier, budget)

    assert report.id == identifier
    assert report.status == PASS, report.witness


@pytest.mark.parametrize(
    "patched, expected",
    [
        pytest.param("is_real_rooted", "real-rooted", id="real-rooted"),
        pytest.param("is_log_concave", "log-concave", id="log-concave"),
        pytest.param("is_unimodal", "unimodal", id="unimodal"),
    ],
)
def test_conj3_witness(monkeypatch, patched, expected):
    """Each descent polynomial is checked for real roots, log-concavity and
    unimodality, and the first property to fail is reported.
    """

    monkeypatch.setattr(conjectures, patched, lambda coefficients: len(coefficients) < 3)

    report = check_conjecture("conj3", 3)

    assert report.status == FAIL
    assert report.witness == {
        "permutation": "1 2 3",
        "descent_polynomial": "(1,3,1)",
        "violates": expected,
    }


def test_conj5_starts_at_zero():
    assert check_conjecture("conj5", 3).range == "0<=n<=3"


def test_conj4_is_partial():

    report = check_conjecture("conj4", 6)

    assert report.status == PARTIAL
    assert report.witness is None
    assert report.range == "m=4: 1<=n<=7; m=5: 1<=n<=6"
    assert report.details["m=4"] == [1, 2, 6, 10, 13, 10, 3]
    assert len(report.details["m=5"]) == 6


def test_conjecture_budget_cap():

    with pytest.raises(CapExceededError):
        check_conjecture("conj1", Conjecture1Check.max_n_cap + 1)


def test_check_conjecture_unknown():

    with pytest.raises(UnknownIdentifierError, match="unknown conjecture 'conj9'"):
        check_conjecture("conj9")


def test_conjecture_ids():

    assert conjecture_ids() == list(CONJECTURE_CHECKS)
    assert conjecture_ids() == ["conj1", "conj2", "conj3", "conj4", "conj5"]
