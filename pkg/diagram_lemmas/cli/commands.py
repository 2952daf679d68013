import argparse
import logging
import sys
from collections.abc import Sequence

import diagram_lemmas.data_types as data_types
import diagram_lemmas.double_complex as double_complex
import diagram_lemmas.framework as framework
import diagram_lemmas.salamander as salamander
import diagram_lemmas.utils as utils

from .diagram_file import parse


def _position(text: str) -> tuple[int, int]:
    try:
        row, col = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected R,C, got {text!r}") from None
    return row, col


def _validate(args: argparse.Namespace, fw: framework.Verification_Framework) -> data_types.Command_Report:
    dc = parse(args.diagram, check_laws=False)
    report = data_types.Command_Report(command="validate")
    for entry in double_complex.validate(dc).entries:
        report.add_line(entry.to_line())
    report.summary["positions"] = len(dc.support())
    return report


def _homology(args: argparse.Namespace, fw: framework.Verification_Framework) -> data_types.Command_Report:
    dc = parse(args.diagram)
    report = data_types.Command_Report(command="homology")
    undefined = 0
    for pos in dc.support():
        obj = dc.object_at(pos)
        for homology in double_complex.all_homology(dc, pos):
            undefined += not homology.defined
            report.add_line(f"{homology.describe()} [in {obj.name} of order {obj.order}]")
    report.summary["positions"] = len(dc.support())
    report.summary["undefined"] = undefined
    return report


def _salamander(args: argparse.Namespace, fw: framework.Verification_Framework) -> data_types.Command_Report:
    dc = parse(args.diagram)
    direction = data_types.Edge_Direction(args.direction)
    report = data_types.Command_Report(command="salamander")
    _, checks, _ = salamander.sequence_hypotheses(dc, args.at, direction)
    for check in checks:
        report.add_line(check.to_line())
    seq = salamander.salamander_sequence(dc, args.at, direction)
    for line in seq.describe():
        report.add_line(line)
    verdict = salamander.verify_salamander(seq)
    for entry in verdict.entries:
        line = (
            f"{entry.position}: direct={entry.direct} criterion={entry.criterion} "
            f"closed form={entry.closed_form}"
        )
        report.add_line(line if entry.passed else f"FAIL {line}")
    for check in salamander.check_composite_coherence(seq):
        report.add_line(check.to_line())
    report.add_line(verdict.summary_line())
    report.summary["exact"] = f"{verdict.exact_count}/{len(verdict.entries)}"
    return report


def _three_by_three(args: argparse.Namespace, fw: framework.Verification_Framework) -> data_types.Command_Report:
    dc = parse(args.diagram)
    verdict = salamander.three_by_three(dc)
    report = data_types.Command_Report(command="3x3")
    for check in verdict.definedness:
        report.add_line(check.to_line())
    for line in verdict.trace:
        report.add_line(line)
    if verdict.exact:
        report.add_line("first row exact")
    else:
        report.add_failure(
            f"first row: chain route {verdict.chain_exact}, direct route {verdict.direct_exact}"
        )
    report.summary["chain_exact"] = str(verdict.chain_exact)
    report.summary["direct_exact"] = str(verdict.direct_exact)
    return report


def _axioms(args: argparse.Namespace, fw: framework.Verification_Framework) -> data_types.Command_Report:
    law_report = fw.run_axioms(data_types.Suite_Backend(args.backend), args.seed)
    report = data_types.Command_Report(command="axioms")
    for entry in law_report.failures():
        report.add_line(entry.to_line())
    for code, count in law_report.counts().items():
        report.add_line(f"{code}: {count} instances")
    report.summary["backend"] = args.backend
    report.summary["instances"] = len(law_report.entries)
    return report


def _fuzz(args: argparse.Namespace, fw: framework.Verification_Framework) -> data_types.Command_Report:
    stats = fw.run_fuzz(args.count, args.seed, data_types.Suite_Backend(args.backend))
    report = data_types.Command_Report(command="fuzz")
    for failure in stats.failures:
        report.add_failure(failure)
    report.add_line(f"{stats.exact}/{stats.complexes} complexes: salamander exact")
    report.add_line(
        f"{stats.isomorphisms_verified}/{stats.qualifying_edges} donor/receptor isomorphisms verified"
    )
    report.summary.update(
        complexes=stats.complexes,
        valid=stats.valid,
        positions_verified=stats.positions_verified,
        positions_skipped=stats.positions_skipped,
        qualifying_edges=stats.qualifying_edges,
    )
    return report


COMMANDS = {
    "validate": _validate,
    "homology": _homology,
    "salamander": _salamander,
    "3x3": _three_by_three,
    "axioms": _axioms,
    "fuzz": _fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[fmt.value for fmt in data_types.Output_Format],
        default=data_types.Output_Format.TEXT.value,
        help="Report layout.",
    )
    common.add_argument("--config", default=None, help="Engine configuration file.")
    common.add_argument(
        "--log-level",
        choices=[level.name.lower() for level in data_types.Log_Level],
        default=None,
        help="Overrides the configured log level.",
    )

    parser = argparse.ArgumentParser(
        prog="diagram-lemmas", description="Diagram lemmas for groups and vector spaces"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("validate", "Check the double complex laws."),
        ("homology", "List the four homology objects at every position."),
        ("salamander", "Build and verify the six-term sequence at a position."),
        ("3x3", "Verify exactness of the first row of a 3x3 grid."),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("diagram", help="Diagram file.")
        if name == "salamander":
            sub.add_argument("--at", type=_position, required=True, help="Position R,C of A.")
            sub.add_argument(
                "--direction",
                choices=[direction.value for direction in data_types.Edge_Direction],
                default=data_types.Edge_Direction.HORIZONTAL.value,
            )
    axioms = subparsers.add_parser("axioms", parents=[common], help="Run an axiom suite.")
    axioms.add_argument(
        "--backend",
        choices=[backend.value for backend in data_types.Suite_Backend],
        default=data_types.Suite_Backend.MIXED.value,
    )
    axioms.add_argument("--seed", type=int, default=None)
    fuzz = subparsers.add_parser("fuzz", parents=[common], help="Fuzz the salamander lemma.")
    fuzz.add_argument("--count", type=int, default=None)
    fuzz.add_argument("--seed", type=int, default=None)
    fuzz.add_argument(
        "--backend",
        choices=[
            data_types.Suite_Backend.TABLE.value,
            data_types.Suite_Backend.VEC.value,
            data_types.Suite_Backend.MIXED.value,
        ],
        default=data_types.Suite_Backend.MIXED.value,
    )
    return parser


def _main(argv: Sequence[str] | None = None) -> int:
    """Exit status 0 on success, 1 when a report holds a failure line, 2 on an error."""
    args = build_parser().parse_args(argv)
    fmt = data_types.Output_Format(args.format)
    try:
        cfg = utils.read_config_file(args.config)
    except RuntimeError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    log_level = data_types.Log_Level[args.log_level.upper()] if args.log_level else None
    fw = framework.Verification_Framework(cfg, log_level)
    fw.initialize()
    try:
        report = COMMANDS[args.command](args, fw)
    except data_types.Engine_Error as error:
        logging.error(f"{args.command} failed: {error}")
        print(f"error: {error}", file=sys.stderr)
        return 2
    finally:
        fw.end()
    sys.stdout.write(report.render(fmt))
    return 1 if report.failed else 0
