# Document the purpose of the command line module.
"""circa command line: analyze, brute-force and export-dot."""
# Overview: Parses arguments, runs the pipeline and prints JSON or DOT.
# Details: Exit code 0 on success, 1 on validation errors, 2 on pipeline errors.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import argparse for command-line argument parsing.
import argparse
# Import logging for the package logger.
import logging
# Import sys for stdout access.
import sys
# Import typing helpers for argv.
from typing import Any, Dict, List

# Import the DOT views.
from circa.cli.dot_export import DOT_VIEWS, dual_dot, flux_dot, partition_dot, triangulated_dot
# Import the pipeline.
from circa.cli.pipeline import AnalysisPipeline, apply_overrides
# Import the problem loader.
from circa.cli.problem import load_problem
# Import report rendering.
from circa.cli.report import render_json, write_output
# Import the exhaustive search.
from circa.partition import brute_force_cmax, stirling3
# Import the potential operation for dual labels.
from circa.potential import compute_psi, extrema
# Import the extraction driver for partition exports.
from circa.extract import extract_partition
# Import the error base class.
from circa.utils.errors import CircaError
# Import logging setup.
from circa.utils.log import LOG_LEVELS, configure_logging


# Add flags shared by every command.
def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="Problem file (JSON)")
    parser.add_argument("--out", default=None, help="Write the output here instead of stdout")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="Logging level (default: $CIRCA_LOG or WARNING)",
    )
    parser.add_argument("--tol", type=float, default=None, help="Set every tolerance except the flux snap threshold")
    parser.add_argument("--center-flux", action="store_true", help="Project the flux onto divergence-free fields first")
    parser.add_argument("--include-outer", action="store_true", help="Triangulate the outer face as well")


# Build argument parser for CLI usage.
def build_parser() -> argparse.ArgumentParser:
    """Build argument parser for CLI usage."""
    parser = argparse.ArgumentParser(prog="circa", description="Macroscopic circulation of planar Markov flux fields")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="Run the full pipeline and print a JSON report")
    _add_common(analyze)
    analyze.add_argument("--brute-check", action="store_true", help="Compare with the exhaustive search")
    analyze.add_argument("--all-extrema", action="store_true", help="Extract a partition for every extremal face pair")

    brute = commands.add_parser("brute-force", help="Search every 3-partition exhaustively")
    _add_common(brute)
    brute.add_argument("--connected", action="store_true", help="Require every part to be connected")
    brute.add_argument("--max-n", type=int, default=None, help="Largest vertex count to search")
    brute.add_argument("--workers", type=int, default=1, help="Search threads")
    brute.add_argument(
        "--objective",
        choices=("circulation", "f_min", "f_max"),
        default="circulation",
        help="Quantity to maximise",
    )

    export = commands.add_parser("export-dot", help="Print a Graphviz DOT view")
    _add_common(export)
    export.add_argument("--what", choices=DOT_VIEWS, required=True, help="View to export")
    return parser


# Run the analyze command.
def cmd_analyze(args: argparse.Namespace, logger: logging.Logger) -> str:
    """Return the JSON report for the analyze command."""
    problem = apply_overrides(load_problem(args.input), include_outer=args.include_outer, center=args.center_flux, tol=args.tol)
    report = AnalysisPipeline(logger).run(problem, brute_check=args.brute_check, all_extrema=args.all_extrema)
    return render_json(report.to_dict())


# Run the brute-force command.
def cmd_brute_force(args: argparse.Namespace, logger: logging.Logger) -> str:
    """Return the JSON result of the exhaustive search."""
    problem = apply_overrides(
        load_problem(args.input),
        include_outer=args.include_outer,
        center=args.center_flux,
        tol=args.tol,
        connected_only=args.connected,
        max_n=args.max_n,
    )
    field = AnalysisPipeline(logger).build_field(problem).field
    options = problem.options
    result = brute_force_cmax(
        field,
        connected_only=options.connected_only,
        max_n=options.max_n,
        workers=args.workers,
        objective=args.objective,
        tolerances=options.tolerances,
    )
    payload: Dict[str, Any] = result.to_dict()
    payload.update(
        {
            "n": field.n,
            "connected_only": options.connected_only,
            "objective": args.objective,
            "partitions_total": stirling3(field.n),
        }
    )
    return render_json(payload)


# Run the export-dot command.
def cmd_export_dot(args: argparse.Namespace, logger: logging.Logger) -> str:
    """Return the DOT text of the requested view."""
    problem = apply_overrides(load_problem(args.input), include_outer=args.include_outer, center=args.center_flux, tol=args.tol)
    pipeline = AnalysisPipeline(logger)
    field = pipeline.build_field(problem).field
    if args.what == "flux":
        return flux_dot(field)
    triangulated = pipeline.triangulate(problem, field)
    if args.what == "triangulated":
        return triangulated_dot(triangulated)
    psi = compute_psi(triangulated, tolerances=problem.options.tolerances)
    if args.what == "dual":
        return dual_dot(triangulated, psi)
    result = extract_partition(triangulated, psi, field, tolerances=problem.options.tolerances, faces=tuple(extrema(psi)))
    return partition_dot(field, result.partition)


# Command handlers by name.
COMMANDS = {"analyze": cmd_analyze, "brute-force": cmd_brute_force, "export-dot": cmd_export_dot}


# Run the CLI.
def main(argv: List[str] | None = None) -> int:
    """Run the circa CLI and return the exit code."""
    args = build_parser().parse_args(argv)
    logger = configure_logging(args.log_level)
    try:
        text = COMMANDS[args.command](args, logger)
    except CircaError as error:
        logger.error("%s failed: %s", args.command, error.message)
        sys.stdout.write(render_json({"error": error.to_dict()}))
        return error.exit_code
    if write_output(text, args.out) is None:
        sys.stdout.write(text)
    else:
        logger.info("Wrote %s", args.out)
    return 0


# Execute the CLI entry point when run directly.
if __name__ == "__main__":
    sys.exit(main())
