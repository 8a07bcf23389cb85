import csv
import io
import json

import pytest

from stack_preimages import cli
from stack_preimages.enumeration.numbers import eq12_total
from stack_preimages.verify.checks import THEOREM_CHECKS
from stack_preimages.verify.reports import FAIL, CheckReport


def invoke(capsys, *arguments):
    """Runs the command line interface and returns its exit code and output."""

    code = cli.run(list(arguments))
    captured = capsys.readouterr()

    return code, captured.out.rstrip("\n"), captured.err


@pytest.mark.parametrize(
    "arguments, expected",
    [
        pytest.param(["sort", "3142"], "1 3 2 4", id="sort"),
        pytest.param(["sort", "3142", "--word"], "AABBAABB", id="word"),
        pytest.param(["sort", "2 3 1", "--times", "2"], "1 2 3", id="times"),
        pytest.param(["fertility", "3142567"], "27", id="fertility"),
        pytest.param(["fertility", "3412"], "0", id="sterile"),
        pytest.param(
            ["fertility", "1324", "--by", "descents"], "0 0\n1 1\n2 1\n3 0", id="by descents"
        ),
        pytest.param(["fertility", "1324", "--oracle"], "2\noracle 2", id="oracle"),
        pytest.param(["preimages", "1324"], "1 3 4 2\n3 1 4 2", id="preimages"),
        pytest.param(["class-count", "--basis", "231", "--n", "5"], "42", id="class size"),
        pytest.param(
            ["class-count", "--basis", "231", "--n", "5", "--preimage"], "91", id="preimage"
        ),
        pytest.param(["series", "catalan", "--terms", "5"], "1 1 2 5 14", id="series"),
    ],
)
def test_plain_output(capsys, arguments, expected):

    code, output, _ = invoke(capsys, *arguments)

    assert code == cli.EXIT_SUCCESS
    assert output == expected


def test_vhc(capsys):

    code, output, _ = invoke(capsys, "vhc", "3142567")

    assert code == cli.EXIT_SUCCESS
    assert output.splitlines()[0] == "(1,3) (3,5) -> (3,1,1)"
    assert len(output.splitlines()) == 6


def test_vhc_canonical(capsys):

    _, output, _ = invoke(capsys, "vhc", "3142567", "--canonical")

    assert output.splitlines() == [
        "hooks (1,3) (3,5)",
        "b_star (3,5)",
        "q_star (3,1,1)",
        "e (3,2,3)",
        "alpha (0,1,1)",
        "d (0,1,3,7)",
    ]

    _, output, _ = invoke(capsys, "vhc", "3412", "--canonical")
    assert output == "none"


def test_vhc_compositions_csv(capsys):

    _, output, _ = invoke(capsys, "vhc", "3142567", "--compositions", "--format", "csv")
    rows = list(csv.reader(io.StringIO(output)))

    assert rows[0] == ["composition"]
    assert rows[1:] == [
        ["(1,1,3)"],
        ["(1,2,2)"],
        ["(1,3,1)"],
        ["(2,1,2)"],
        ["(2,2,1)"],
        ["(3,1,1)"],
    ]


def test_class_count_json(capsys):

    code, output, _ = invoke(
        capsys,
        "class-count",
        "--basis",
        "132",
        "321",
        "--n",
        "4",
        "--preimage",
        "--format",
        "json",
    )

    assert code == cli.EXIT_SUCCESS
    assert json.loads(output) == {
        "cmd": "class-count",
        "params": {"basis": ["132", "321"], "n": "4", "k": None, "by": None, "preimage": True},
        "result": str(eq12_total(4)),
    }


def test_fertility_by_peaks_json(capsys):

    _, output, _ = invoke(capsys, "fertility", "123", "--by", "peaks", "--format", "json")
    payload = json.loads(output)

    assert payload["cmd"] == "fertility"
    assert payload["params"]["permutation"] == "1 2 3"
    assert payload["result"] == ["4", "1", "0"]


def test_verify(capsys):

    code, output, _ = invoke(capsys, "verify", "thm3", "--max-n", "5", "--no-timing")

    assert code == cli.EXIT_SUCCESS
    assert output == "thm3 [2<=n<=5] pass"


def test_verify_json(capsys):

    code, output, _ = invoke(capsys, "verify", "thm10", "--max-n", "6", "--format", "json")
    payload = json.loads(output)

    assert code == cli.EXIT_SUCCESS
    assert payload["cmd"] == "verify"
    assert payload["params"] == {"id": "thm10", "max_n": "6"}
    assert payload["report"]["status"] == "pass"
    assert payload["report"]["range"] == "1<=n<=6"
    assert isinstance(payload["report"]["millis"], int)
    assert "result" not in payload


def test_verify_all_csv(capsys):

    code, output, _ = invoke(
        capsys, "verify", "all", "--max-n", "4", "--format", "csv", "--no-timing"
    )
    rows = list(csv.reader(io.StringIO(output)))

    assert code == cli.EXIT_SUCCESS
    assert rows[0] == ["id", "range", "status"]
    assert [row[0] for row in rows[1:]] == list(THEOREM_CHECKS)
    assert {row[2] for row in rows[1:]} == {"pass"}


def test_verify_failure_exit_code(capsys, monkeypatch):

    def failing(identifier, max_n=None, jobs=1):
        return CheckReport(id=identifier, range="1<=n<=1", status=FAIL, witness={"n": "1"})

    monkeypatch.setattr(cli, "verify_theorem", failing)

    code, output, _ = invoke(capsys, "verify", "thm3", "--no-timing")

    assert code == cli.EXIT_FAILURE
    assert output == "thm3 [1<=n<=1] fail\n    n: 1"


def test_conjecture(capsys):

    code, output, _ = invoke(capsys, "conjecture", "conj4", "--budget", "6", "--no-timing")

    assert code == cli.EXIT_SUCCESS
    assert output == "conj4 [m=4: 1<=n<=7; m=5: 1<=n<=6] partial"


def test_series_csv(capsys):

    _, output, _ = invoke(capsys, "series", "fine", "--terms", "4", "--format", "csv")
    assert output.splitlines() == ["n,coefficient", "0,1", "1,0", "2,1", "3,2"]


def test_growth321(capsys):

    code, output, _ = invoke(capsys, "growth321", "--max-n", "4", "--no-timing")
    lines = output.splitlines()

    assert code == cli.EXIT_SUCCESS
    assert lines[:3] == ["1 1 1.0000", "2 2 1.4142", "3 6 1.8171"]
    assert lines[-1] == "growth321 [1<=n<=4] pass"


@pytest.mark.parametrize(
    "arguments",
    [
        pytest.param([], id="no command"),
        pytest.param(["shuffle", "123"], id="unknown command"),
        pytest.param(["verify", "thm99"], id="unknown theorem"),
        pytest.param(["series", "motzkin"], id="unknown series"),
        pytest.param(["fertility", "123", "--by", "runs"], id="unknown statistic"),
        pytest.param(["vhc", "123", "--canonical", "--compositions"], id="exclusive flags"),
    ],
)
def test_usage_errors(capsys, arguments):

    code, _, _ = invoke(capsys, *arguments)
    assert code == cli.EXIT_USAGE


@pytest.mark.parametrize(
    "arguments, message",
    [
        pytest.param(["sort", "3a1"], "not a valid permutation", id="bad permutation"),
        pytest.param(["preimages", "123456789"], "capped at n=8", id="fibre cap"),
        pytest.param(
            ["fertility", "3142567", "--oracle", "--max-n", "5"],
            "capped at n=5",
            id="safety cap",
        ),
        pytest.param(
            ["class-count", "--basis", "231", "--n", "4", "--by", "peaks"],
            "--by only applies",
            id="by without preimage",
        ),
        pytest.param(["series", "fine", "--terms", "0"], "at least 1", id="no terms"),
        pytest.param(["verify", "thm3", "--max-n", "20"], "capped at n=13", id="check cap"),
        pytest.param(
            ["verify", "thm3", "--max-n", "1"], "starts at n=2", id="below check start"
        ),
        pytest.param(
            ["verify", "all", "--max-n", "10", "--jobs", "2"],
            "capped at n=",
            id="parallel check cap",
        ),
        pytest.param(
            ["sort", "3142", "--times", "-1"], "must be non-negative", id="negative passes"
        ),
        pytest.param(
            ["class-count", "--basis", "231", "--n", "-1"],
            "n must be non-negative",
            id="negative n",
        ),
        pytest.param(
            ["class-count", "--basis", "231", "--n", "4", "--k", "-2", "--preimage"],
            "k must be non-negative",
            id="negative k",
        ),
    ],
)
def test_invalid_input(capsys, arguments, message):

    code, output, error = invoke(capsys, *arguments)

    assert code == cli.EXIT_USAGE
    assert output == ""
    assert message in error


def test_version(capsys):

    code, output, _ = invoke(capsys, "--version")

    assert code == cli.EXIT_SUCCESS
    assert output.startswith("stack-preimages ")
