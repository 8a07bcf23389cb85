import pickle

import pytest

from stack_preimages.exceptions import (
    CapExceededError,
    CompositionError,
    InexactDivisionError,
    InvalidInputError,
    PatternError,
    PermutationError,
    SeriesError,
    StackPreimagesError,
    UnknownIdentifierError,
)


@pytest.mark.parametrize(
    "error",
    [
        pytest.param(PermutationError("(1, 1) contains repeated entries."), id="permutation"),
        pytest.param(PatternError("a barred pattern needs a barred entry."), id="pattern"),
        pytest.param(SeriesError("division of a series by zero."), id="series"),
        pytest.param(InexactDivisionError("7 / 2"), id="inexact division"),
        pytest.param(InvalidInputError("t must be non-negative, got -1."), id="invalid input"),
        pytest.param(CompositionError("(2, 0) is not a composition."), id="composition"),
        pytest.param(CapExceededError("a class preimage sweep", 14, 13), id="cap"),
        pytest.param(
            UnknownIdentifierError("theorem", "thm99", {"thm3": None, "thm1": None}),
            id="unknown identifier",
        ),
    ],
)
def test_pickle(error):
    """Errors raised inside of a worker process are pickled back to the parent."""

    restored = pickle.loads(pickle.dumps(error))

    assert type(restored) is type(error)
    assert isinstance(restored, StackPreimagesError)
    assert restored.args == error.args
    assert str(restored) == str(error)


def test_cap_exceeded_error():

    error = CapExceededError("a class preimage sweep", 14, 13)

    assert str(error) == "a class preimage sweep was requested for n=14 but is capped at n=13."
    assert (error.what, error.n, error.cap) == ("a class preimage sweep", 14, 13)
    assert isinstance(error, ValueError)


def test_unknown_identifier_error():

    error = UnknownIdentifierError("theorem", "thm99", {"thm3": None, "thm1": None})

    assert str(error) == "unknown theorem 'thm99', expected one of thm1, thm3"
    assert error.choices == ("thm1", "thm3")
    assert isinstance(error, KeyError)

    assert str(UnknownIdentifierError("series", "motzkin")) == "unknown series 'motzkin'"
