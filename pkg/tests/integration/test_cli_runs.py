# Document the purpose of this integration test module.
"""Integration runs of the circa command line on problem files."""

# Allow future annotations for type hints in tests.
from __future__ import annotations

# Import contextlib to capture stdout.
import contextlib
# Import io for the capture buffer.
import io
# Import json for reading reports.
import json
# Import tempfile to create isolated directories for reports.
import tempfile
# Import unittest for the test framework.
import unittest
# Import Path for filesystem path management.
from pathlib import Path

# Import the report helpers.
from circa.cli import strip_timing
# Import the CLI entry point.
from circa.cli.main import main
# Import the fixture directory.
from tests.support import FIXTURES


# Run the CLI and return the exit code and parsed stdout.
def _analyze(*argv):
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = main(["analyze", *argv])
    return code, json.loads(buffer.getvalue())


# Validate full analyze runs.
class TestAnalyzeCommand(unittest.TestCase):
    # Verify two runs produce the same report apart from timing.
    def test_deterministic(self) -> None:
        # Create a temporary directory for the reports.
        with tempfile.TemporaryDirectory() as temp_dir:
            payloads = []
            for name in ("first.json", "second.json"):
                # Run analyze into a report file.
                target = Path(temp_dir) / name
                code = main(["analyze", str(FIXTURES / "eight_state_g1.json"), "--out", str(target)])
                self.assertEqual(code, 0)
                payloads.append(json.loads(target.read_text(encoding="utf-8")))
        # Assert the timing block is the only difference.
        self.assertIn("timing", payloads[0])
        self.assertEqual(strip_timing(payloads[0]), strip_timing(payloads[1]))

    # Verify the hexagon report with the exhaustive comparison.
    def test_hexagon_brute_check(self) -> None:
        # Run analyze with the brute-force comparison.
        code, report = _analyze(str(FIXTURES / "hexagon.json"), "--brute-check")
        # Assert success and the potential gap.
        self.assertEqual(code, 0)
        self.assertAlmostEqual(report["max_circulation"], 1.0, places=12)
        # Assert the extracted partition reaches the gap with connected parts.
        self.assertAlmostEqual(report["verification"]["circulation"], 1.0, places=12)
        self.assertEqual(report["partition"]["connected_parts"], [True, True, True])
        # Assert the exhaustive optima bracket the extraction.
        self.assertEqual(report["brute_force"]["connected"]["value"], 1.0)
        self.assertEqual(report["brute_force"]["unrestricted"]["value"], 2.0)
        # Assert flux input has no reconstructed chain at this mass.
        self.assertNotIn("reconstructed_chain", report)

    # Verify every extremal pair is reported.
    def test_all_extrema(self) -> None:
        # Run analyze over all extremal pairs.
        code, report = _analyze(str(FIXTURES / "hexagon.json"), "--all-extrema")
        # Assert the outer face pairs with each interior face.
        self.assertEqual(code, 0)
        self.assertEqual([(entry["face_min"], entry["face_max"]) for entry in report["all_extrema"]], [(0, 1), (0, 2), (0, 3), (0, 4)])
        # Assert every pair either reaches the gap or records its error.
        for entry in report["all_extrema"]:
            if "error" not in entry:
                self.assertAlmostEqual(entry["circulation"], 1.0, places=12)

    # Verify the outer face triangulation flag.
    def test_include_outer(self) -> None:
        # Run analyze with the outer face triangulated.
        code, report = _analyze(str(FIXTURES / "eight_state_g1.json"), "--include-outer")
        # Assert every face is a triangle and the dual is 3-edge-connected.
        self.assertEqual(code, 0)
        self.assertTrue(all(len(face) == 3 for face in report["triangulation"]["faces"]))
        self.assertGreaterEqual(report["triangulation"]["dual_edge_connectivity"], 3)
        # Assert the extraction still reaches the gap.
        self.assertAlmostEqual(report["verification"]["circulation"], report["max_circulation"], delta=1e-9)

    # Verify default options succeed when the open outer face blocks the cut.
    def test_corner_grid_closes_outer_face(self) -> None:
        # Run analyze without --include-outer.
        code, report = _analyze(str(FIXTURES / "corner_grid.json"))
        # Assert success at the potential gap.
        self.assertEqual(code, 0)
        self.assertAlmostEqual(report["max_circulation"], 10.0, delta=1e-9)
        self.assertAlmostEqual(report["verification"]["circulation"], 10.0, delta=1e-9)
        # Assert the report describes the closed completion the cut used.
        self.assertTrue(report["partition"]["outer_face_closed"])
        self.assertTrue(report["triangulation"]["include_outer"])
        self.assertTrue(all(len(face) == 3 for face in report["triangulation"]["faces"]))
        self.assertEqual(len(report["triangulation"]["chords"]), 5)
        # Assert the extremal faces are the two corner triangles.
        faces = report["triangulation"]["faces"]
        self.assertEqual(set(faces[report["extrema"]["face_max"]]), {2, 3, 6})
        self.assertEqual(set(faces[report["extrema"]["face_min"]]), {4, 7, 8})

    # Verify an unknown log level exits through argparse.
    def test_bad_log_level(self) -> None:
        # Capture the usage error.
        with contextlib.redirect_stderr(io.StringIO()) as errors:
            with self.assertRaises(SystemExit) as ctx:
                main(["analyze", str(FIXTURES / "hexagon.json"), "--log-level", "bogus"])
        # Assert the argparse exit code and message.
        self.assertEqual(ctx.exception.code, 2)
        self.assertIn("--log-level", errors.getvalue())


# Allow running the tests directly.
if __name__ == "__main__":
    # Run the test suite.
    unittest.main()
