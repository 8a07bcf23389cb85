import logging
import time

import pytest

from stack_preimages.exceptions import CapExceededError
from stack_preimages.utilities import Timer, parallel_map, timed


def square(value: int) -> int:
    return value * value


def capped_square(value: int) -> int:

    if value > 2:
        raise CapExceededError("a squaring sweep", value, 2)

    return value * value


def test_timed(caplog):
    """Tests that the elapsed time is recorded and logged when labelled."""

    with caplog.at_level(logging.DEBUG, logger="stack_preimages.utilities.utilities"):

        with timed("nap") as timer:
            time.sleep(0.01)

    assert timer.elapsed >= 0.01
    assert timer.millis >= 10
    assert "nap: elapsed time" in caplog.text


def test_timed_records_on_error():

    with pytest.raises(RuntimeError):

        with timed() as timer:
            raise RuntimeError()

    assert timer.elapsed >= 0.0


def test_timer_millis():
    assert Timer(1.2346).millis == 1235


@pytest.mark.parametrize(
    "jobs",
    [
        pytest.param(None, id="None"),
        pytest.param(1, id="serial"),
        pytest.param(2, id="two workers"),
    ],
)
def test_parallel_map(jobs):

    assert parallel_map(square, range(10), jobs) == [value * value for value in range(10)]
    assert parallel_map(square, [], jobs) == []


@pytest.mark.parametrize(
    "jobs",
    [
        pytest.param(1, id="serial"),
        pytest.param(2, id="two workers"),
    ],
)
def test_parallel_map_error(jobs):
    """Errors raised by the mapped function reach the caller unchanged."""

    with pytest.raises(CapExceededError, match="capped at n=2"):
        parallel_map(capped_square, range(5), jobs)
