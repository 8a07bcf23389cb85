"""The ``stack-preimages`` command line interface.

Every command writes its payload to stdout in one of three formats: ``plain`` text,
``json`` (``{cmd, params, result | report}`` with every count written as a decimal
string) or ``csv`` (a header row followed by one row per table entry). Log messages
go to stderr.

Exit codes are 0 on success, 1 when a check fails and 2 on a usage error or invalid
input.
"""
import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from stack_preimages._version import __version__
from stack_preimages.enumeration.series import GENERATING_FUNCTIONS, gf_coefficients
from stack_preimages.exceptions import CapExceededError, StackPreimagesError
from stack_preimages.hooks.vhc import (
    canonical_vhc,
    descent_distribution,
    enumerate_vhcs,
    fertility,
    induced_composition,
    peak_distribution,
    valid_compositions,
)
from stack_preimages.permutations.patterns import format_pattern, parse_pattern
from stack_preimages.permutations.perm import format_permutation, parse_permutation
from stack_preimages.permutations.stacksort import (
    fertility_by_filter,
    image_statistics,
    preimages,
    pushpop_word,
    sort_iter,
)
from stack_preimages.verify.checks import THEOREM_CHECKS, verify_theorem
from stack_preimages.verify.conjectures import CONJECTURE_CHECKS, check_conjecture
from stack_preimages.verify.growth import av321_growth_report
from stack_preimages.verify.reports import CheckReport, format_value
from stack_preimages.verify.runner import run_all
from stack_preimages.verify.sweeps import class_preimage_count, class_size

logger = logging.getLogger(__name__)

FORMATS = ("plain", "json", "csv")
STATISTICS = ("descents", "peaks")

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


@dataclass
class Emission:
    """The outcome of a command, before it is rendered in the requested format."""

    cmd: str
    params: Dict[str, Any]
    result: Any = None
    reports: Optional[List[CheckReport]] = None
    headers: Optional[List[str]] = None
    rows: Optional[List[List[Any]]] = None
    text: str = ""
    failed: bool = False

    extra: Dict[str, Any] = field(default_factory=dict)


def _require_within(args: argparse.Namespace, n: int, what: str):

    if args.max_n is not None and n > args.max_n:
        raise CapExceededError(what, n, args.max_n)


def _composition_text(q: Sequence[int]) -> str:
    return format_value(tuple(q))


def _distribution_rows(distribution: Sequence[int]) -> List[List[Any]]:
    return [[m, value] for m, value in enumerate(distribution)]


def _distribution_text(distribution: Sequence[int]) -> str:
    return "\n".join(f"{m} {value}" for m, value in enumerate(distribution))


def _sort(args: argparse.Namespace) -> Emission:

    p = parse_permutation(args.permutation)
    params = {"permutation": p, "times": args.times}

    if args.word:
        word = pushpop_word(p)
        return Emission("sort", params, result=str(word), text=str(word))

    image = sort_iter(p, args.times)
    return Emission("sort", params, result=image, text=format_permutation(image))


def _fertility(args: argparse.Namespace) -> Emission:

    p = parse_permutation(args.permutation)
    params = {"permutation": p, "by": args.by, "oracle": args.oracle}

    if args.by is None:

        value = fertility(p)
        emission = Emission("fertility", params, result=value, text=str(value))

        if args.oracle:

            _require_within(args, len(p), "the fertility oracle")
            expected = fertility_by_filter(p)

            emission.extra["oracle"] = expected
            emission.failed = expected != value

        return emission

    distribution = (descent_distribution if args.by == "descents" else peak_distribution)(p)

    emission = Emission(
        "fertility",
        params,
        result=list(distribution),
        headers=["m", "count"],
        rows=_distribution_rows(distribution),
        text=_distribution_text(distribution),
    )

    if args.oracle:

        _require_within(args, len(p), "the fertility oracle")
        expected = image_statistics(len(p), args.by).get(p, (0,) * max(len(p), 1))

        emission.extra["oracle"] = list(expected)
        emission.failed = tuple(expected) != tuple(distribution)

    return emission


def _preimages(args: argparse.Namespace) -> Emission:

    p = parse_permutation(args.permutation)
    _require_within(args, len(p), "listing a fibre")

    fibre = preimages(p)

    return Emission(
        "preimages",
        {"permutation": p},
        result=fibre,
        headers=["preimage"],
        rows=[[sigma] for sigma in fibre],
        text="\n".join(format_permutation(sigma) for sigma in fibre),
    )


def _vhc(args: argparse.Namespace) -> Emission:

    p = parse_permutation(args.permutation)
    params = {"permutation": p, "canonical": args.canonical, "compositions": args.compositions}

    if args.canonical:

        data = canonical_vhc(p)

        if data is None:
            return Emission("vhc", params, result=None, text="none")

        result = {
            "hooks": data.configuration.to_pairs(),
            "b_star": data.b_star,
            "q_star": data.q_star,
            "e": data.e,
            "alpha": data.alpha,
            "d": data.d,
        }
        text = "\n".join(
            f"{key} {' '.join(map(_composition_text, value)) if key == 'hooks' else _composition_text(value)}"
            for key, value in result.items()
        )

        return Emission("vhc", params, result=result, text=text)

    if args.compositions:

        compositions = valid_compositions(p)

        return Emission(
            "vhc",
            params,
            result=compositions,
            headers=["composition"],
            rows=[[_composition_text(q)] for q in compositions],
            text="\n".join(_composition_text(q) for q in compositions),
        )

    configurations = enumerate_vhcs(p)
    rows = [
        [" ".join(map(_composition_text, v.to_pairs())), _composition_text(induced_composition(v))]
        for v in configurations
    ]

    return Emission(
        "vhc",
        params,
        result=[
            {"hooks": v.to_pairs(), "composition": induced_composition(v)}
            for v in configurations
        ],
        headers=["hooks", "composition"],
        rows=rows,
        text="\n".join(f"{hooks} -> {q}".lstrip() for hooks, q in rows),
    )


def _class_count(args: argparse.Namespace) -> Emission:

    basis = [parse_pattern(text) for text in args.basis]
    _require_within(args, args.n, "a class sweep")

    params = {
        "basis": [format_pattern(t) for t in basis],
        "n": args.n,
        "k": args.k,
        "by": args.by,
        "preimage": args.preimage,
    }

    if not args.preimage:

        if args.by is not None:
            raise StackPreimagesError("--by only applies together with --preimage.")

        value = class_size(basis, args.n, args.k)
        return Emission("class-count", params, result=value, text=str(value))

    value = class_preimage_count(
        basis, args.n, refine=args.by, k=args.k, oracle=args.oracle, jobs=args.jobs
    )

    if args.by is None:
        return Emission("class-count", params, result=value, text=str(value))

    return Emission(
        "class-count",
        params,
        result=list(value),
        headers=["m", "count"],
        rows=_distribution_rows(value),
        text=_distribution_text(value),
    )


def _report_emission(cmd: str, params: Dict[str, Any], reports: List[CheckReport]) -> Emission:

    return Emission(
        cmd,
        params,
        reports=reports,
        headers=["id", "range", "status", "millis"],
        failed=any(report.failed for report in reports),
    )


def _verify(args: argparse.Namespace) -> Emission:

    params = {"id": args.id, "max_n": args.max_n}

    if args.id == "all":
        reports = run_all(list(THEOREM_CHECKS), jobs=args.jobs, max_n=args.max_n)
    else:
        reports = [verify_theorem(args.id, args.max_n, args.jobs)]

    return _report_emission("verify", params, reports)


def _conjecture(args: argparse.Namespace) -> Emission:

    budget = args.budget if args.budget is not None else args.max_n
    params = {"id": args.id, "budget": budget}

    if args.id == "all":
        reports = run_all(list(CONJECTURE_CHECKS), jobs=args.jobs, max_n=budget)
    else:
        reports = [check_conjecture(args.id, budget, args.jobs)]

    return _report_emission("conjecture", params, reports)


def _series(args: argparse.Namespace) -> Emission:

    if args.terms < 1:
        raise StackPreimagesError("--terms must be at least 1.")

    coefficients = gf_coefficients(args.name, max(args.terms - 1, 1))[: args.terms]

    return Emission(
        "series",
        {"name": args.name, "terms": args.terms},
        result=coefficients,
        headers=["n", "coefficient"],
        rows=[[n, value] for n, value in enumerate(coefficients)],
        text=" ".join(str(value) for value in coefficients),
    )


def _growth321(args: argparse.Namespace) -> Emission:

    growth = (
        av321_growth_report(jobs=args.jobs)
        if args.max_n is None
        else av321_growth_report(args.max_n, args.jobs)
    )

    rows = [[row.n, row.count, row.root] for row in growth.rows]

    return Emission(
        "growth321",
        {"max_n": args.max_n},
        result=[{"n": n, "count": count, "root": root} for n, count, root in rows],
        reports=[growth.report],
        headers=["n", "count", "root"],
        rows=rows,
        text="\n".join(f"{n} {count} {root}" for n, count, root in rows),
        failed=growth.report.failed,
    )


def _render_plain(emission: Emission, timing: bool) -> str:

    sections = [emission.text] if emission.text or emission.reports is None else []

    if emission.reports is not None:
        sections.extend(report.to_text(timing) for report in emission.reports)

    if "oracle" in emission.extra:

        oracle = emission.extra["oracle"]
        oracle_text = " ".join(map(str, oracle)) if isinstance(oracle, list) else str(oracle)

        sections.append(f"oracle {oracle_text}")

    return "\n".join(sections)


def _render_json(emission: Emission, timing: bool) -> str:

    payload: Dict[str, Any] = {"cmd": emission.cmd, "params": format_value(emission.params)}

    if emission.result is not None or emission.reports is None:
        payload["result"] = format_value(emission.result)

    if emission.reports is not None:

        reports = [report.to_dict(timing) for report in emission.reports]
        payload["report"] = reports[0] if len(reports) == 1 else reports

    for key, value in emission.extra.items():
        payload[key] = format_value(value)

    return json.dumps(payload, indent=2)


def _render_csv(emission: Emission, timing: bool) -> str:

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    if emission.rows is not None and emission.headers is not None:

        writer.writerow(emission.headers)
        writer.writerows([format_value(value) for value in row] for row in emission.rows)

    elif emission.reports is not None:

        headers = emission.headers if timing else emission.headers[:-1]
        writer.writerow(headers)

        for report in emission.reports:
            row = report.to_dict(timing)
            writer.writerow([row.get(header, "") for header in headers])

    else:

        writer.writerow(["result"])
        writer.writerow([_render_plain(emission, timing)])

    return buffer.getvalue().rstrip("\n")


_RENDERERS = {"plain": _render_plain, "json": _render_json, "csv": _render_csv}


def _common_options() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(add_help=False)

    parser.add_argument(
        "--format", choices=FORMATS, default="plain", help="the output format."
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="the number of worker processes to use."
    )
    parser.add_argument(
        "--max-n",
        dest="max_n",
        type=int,
        default=None,
        help="the largest n to sweep, or a safety cap on n for single computations.",
    )
    parser.add_argument(
        "--no-timing",
        dest="timing",
        action="store_false",
        help="omit wall times from the output.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-vv for debug output).",
    )

    return parser


def build_parser() -> argparse.ArgumentParser:

    common = _common_options()

    parser = argparse.ArgumentParser(
        prog="stack-preimages",
        description="Count and verify preimages of permutations under the stack-sorting map.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    sort = commands.add_parser("sort", parents=[common], help="stack-sort a permutation.")
    sort.add_argument("permutation")
    sort.add_argument("--times", type=int, default=1, help="the number of passes.")
    sort.add_argument(
        "--word", action="store_true", help="print the push / pop word instead."
    )
    sort.set_defaults(handler=_sort)

    fertility_parser = commands.add_parser(
        "fertility", parents=[common], help="count the preimages of a permutation."
    )
    fertility_parser.add_argument("permutation")
    fertility_parser.add_argument("--by", choices=STATISTICS, default=None)
    fertility_parser.add_argument(
        "--oracle", action="store_true", help="cross-check against brute force."
    )
    fertility_parser.set_defaults(handler=_fertility)

    preimages_parser = commands.add_parser(
        "preimages", parents=[common], help="list the preimages of a permutation."
    )
    preimages_parser.add_argument("permutation")
    preimages_parser.set_defaults(handler=_preimages)

    vhc = commands.add_parser(
        "vhc", parents=[common], help="list the valid hook configurations of a permutation."
    )
    vhc.add_argument("permutation")
    mode = vhc.add_mutually_exclusive_group()
    mode.add_argument("--canonical", action="store_true")
    mode.add_argument("--compositions", action="store_true")
    vhc.set_defaults(handler=_vhc)

    class_count = commands.add_parser(
        "class-count",
        parents=[common],
        help="count a permutation class or the preimages of one.",
    )
    class_count.add_argument("--basis", nargs="+", required=True)
    class_count.add_argument("--n", type=int, required=True)
    class_count.add_argument("--k", type=int, default=None, help="restrict to k descents.")
    class_count.add_argument("--by", choices=STATISTICS, default=None)
    class_count.add_argument(
        "--preimage", action="store_true", help="count s^-1 of the class."
    )
    class_count.add_argument(
        "--oracle", action="store_true", help="cross-check against brute force."
    )
    class_count.set_defaults(handler=_class_count)

    verify = commands.add_parser("verify", parents=[common], help="run a theorem check.")
    verify.add_argument("id", choices=list(THEOREM_CHECKS) + ["all"])
    verify.set_defaults(handler=_verify)

    conjecture = commands.add_parser(
        "conjecture", parents=[common], help="check a conjecture up to a budget."
    )
    conjecture.add_argument("id", choices=list(CONJECTURE_CHECKS) + ["all"])
    conjecture.add_argument("--budget", type=int, default=None)
    conjecture.set_defaults(handler=_conjecture)

    series = commands.add_parser(
        "series", parents=[common], help="print generating function coefficients."
    )
    series.add_argument("name", choices=list(GENERATING_FUNCTIONS))
    series.add_argument("--terms", type=int, default=10)
    series.set_defaults(handler=_series)

    growth = commands.add_parser(
        "growth321", parents=[common], help="tabulate |s^-1(Av_n(321))|."
    )
    growth.set_defaults(handler=_growth321)

    return parser


def _configure_logging(verbosity: int):

    level = logging.WARNING

    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG

    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Runs the command line interface and returns its exit code."""

    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_SUCCESS if error.code in (0, None) else EXIT_USAGE

    _configure_logging(args.verbose)
    logger.debug(f"running {args.command} with {vars(args)}")

    try:
        emission = args.handler(args)
    except StackPreimagesError as error:

        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE

    print(_RENDERERS[args.format](emission, args.timing))

    return EXIT_FAILURE if emission.failed else EXIT_SUCCESS


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
