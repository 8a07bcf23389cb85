import pytest

from stack_preimages.enumeration.numbers import catalan
from stack_preimages.exceptions import CapExceededError
from stack_preimages.verify.growth import GROWTH_CAP, av321_growth_report, nth_root_text
from stack_preimages.verify.reports import PASS


@pytest.mark.parametrize(
    "value, n, expected",
    [
        pytest.param(16, 2, "4.0000", id="exact"),
        pytest.param(2, 2, "1.4142", id="sqrt 2"),
        pytest.param(1, 1, "1.0000", id="one"),
    ],
)
def test_nth_root_text(value, n, expected):
    assert nth_root_text(value, n) == expected


def test_av321_growth_report():

    growth = av321_growth_report(6)

    assert growth.report.id == "growth321"
    assert growth.report.status == PASS, growth.report.witness
    assert growth.report.range == "1<=n<=6"

    assert [row.n for row in growth.rows] == [1, 2, 3, 4, 5, 6]
    assert [row.count for row in growth.rows][:3] == [1, 2, 6]
    assert all(row.count >= catalan(row.n) for row in growth.rows)
    assert growth.rows[1].root == "1.4142"


def test_av321_growth_report_cap():

    with pytest.raises(CapExceededError):
        av321_growth_report(GROWTH_CAP + 1)
