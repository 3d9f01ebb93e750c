# Provide module documentation for the command line package.
"""Problem files, the analysis pipeline, reports and the circa command line."""

# Import the problem loader and models.
from circa.cli.problem import ProblemFile, ProblemOptions, load_problem, parse_problem
# Import the pipeline.
from circa.cli.pipeline import AnalysisPipeline, apply_overrides
# Import the report model and rendering helpers.
from circa.cli.report import AnalysisReport, render_json, strip_timing

# Define the public API for the command line package.
__all__ = [
    "AnalysisPipeline",
    "AnalysisReport",
    "ProblemFile",
    "ProblemOptions",
    "apply_overrides",
    "load_problem",
    "parse_problem",
    "render_json",
    "strip_timing",
]
