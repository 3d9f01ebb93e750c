# Document the purpose of this unit test module.
"""Unit tests for 3-partitions, circulation and the exhaustive search."""

# Allow future annotations for type hints in tests.
from __future__ import annotations

# Import unittest for the test framework.
import unittest

# Import numpy for random fields.
import numpy as np

# Import the flow field model.
from circa.flowfield import NetFluxField, net_flux_from_edges
# Import the partition operations under test.
from circa.partition import (
    brute_force_cmax,
    circulation,
    iter_partitions,
    pair_flux,
    partition_from_parts,
    stirling3,
    validate_partition,
)
# Import the errors the operations raise.
from circa.utils.errors import BadLength, EmptyPart, InvalidLabel, LemmaViolation, TooLarge
# Import shared builders.
from tests.support import hexagon_field, random_divergence_free, random_labels

# Non-contiguous hexagon partition.
ALTERNATING = ["A", "B", "C", "A", "B", "C"]
# Contiguous hexagon partition.
CONTIGUOUS = ["A", "A", "B", "B", "C", "C"]


# Validate partition construction.
class TestThreePartition(unittest.TestCase):
    # Verify letters and integers are accepted.
    def test_labels(self) -> None:
        # Build the same partition two ways.
        by_letter = validate_partition(["A", "b", "C"], 3)
        by_index = validate_partition([0, 1, 2], 3)
        # Assert both agree.
        self.assertEqual(by_letter, by_index)
        # Assert serialization uses 1-based ids.
        self.assertEqual(by_letter.to_dict()["parts"], {"A": [1], "B": [2], "C": [3]})

    # Verify indicator vectors partition the ones vector.
    def test_indicators(self) -> None:
        # Build the contiguous hexagon partition.
        p = validate_partition(CONTIGUOUS, 6)
        # Sum the three indicators.
        total = p.indicator("A") + p.indicator("B") + p.indicator("C")
        # Assert every vertex is covered once.
        np.testing.assert_array_equal(total, np.ones(6))
        # Assert the pairwise products vanish.
        self.assertEqual(float(p.indicator("A") @ p.indicator("B")), 0.0)

    # Verify empty parts are rejected.
    def test_empty_part(self) -> None:
        # Assert a missing C is reported.
        with self.assertRaises(EmptyPart) as ctx:
            validate_partition(["A", "B", "B"], 3)
        # Assert the missing label is named.
        self.assertEqual(ctx.exception.details["label"], "C")

    # Verify length mismatches are rejected.
    def test_bad_length(self) -> None:
        # Assert a short vector is rejected.
        with self.assertRaises(BadLength):
            validate_partition(["A", "B", "C"], 4)

    # Verify unknown labels are rejected.
    def test_invalid_label(self) -> None:
        # Assert D is not a part.
        with self.assertRaises(InvalidLabel):
            validate_partition(["A", "B", "D"], 3)

    # Verify partitions built from vertex lists.
    def test_from_parts(self) -> None:
        # Build from three lists.
        p = partition_from_parts([[0, 3], [1, 4], [2, 5]], 6)
        # Assert the labels match the alternating pattern.
        self.assertEqual(p, validate_partition(ALTERNATING, 6))
        # Assert overlapping lists are rejected.
        with self.assertRaises(BadLength):
            partition_from_parts([[0, 1], [1], [2]], 3)


# Validate pair fluxes and circulation.
class TestCirculation(unittest.TestCase):
    # Verify the alternating hexagon partition.
    def test_hexagon_alternating(self) -> None:
        # Evaluate the circulation report.
        report = circulation(hexagon_field(), validate_partition(ALTERNATING, 6))
        # Assert the pair flux is exactly 2.
        self.assertEqual(report.circulation, 2.0)
        # Assert each boundary has two edges and density 1.
        self.assertEqual([b.size for b in report.boundaries], [2, 2, 2])
        self.assertEqual(list(report.density_fluxes), [1.0, 1.0, 1.0])

    # Verify the contiguous hexagon partition.
    def test_hexagon_contiguous(self) -> None:
        # Evaluate the circulation report.
        report = circulation(hexagon_field(), validate_partition(CONTIGUOUS, 6))
        # Assert the pair flux is exactly 1.
        self.assertEqual(pair_flux(hexagon_field(), validate_partition(CONTIGUOUS, 6), "A", "B"), 1.0)
        # Assert the density flux is 1 and f_min equals f_max.
        self.assertEqual((report.f_min, report.f_max), (1.0, 1.0))

    # Verify the three cyclic pair fluxes agree on random fields.
    def test_cyclic_pair_fluxes_agree(self) -> None:
        # Seed a generator for reproducibility.
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            # Draw a field and a partition.
            n = int(rng.integers(4, 11))
            field = NetFluxField.from_matrix(random_divergence_free(n, rng))
            p = validate_partition(random_labels(n, rng), n)
            # Compute the three cyclic pair fluxes.
            fluxes = [pair_flux(field, p, a, b) for a, b in (("A", "B"), ("B", "C"), ("C", "A"))]
            # Assert they agree.
            self.assertLess(max(fluxes) - min(fluxes), 1e-9)

    # Verify divergent fields trip the agreement check.
    def test_lemma_violation(self) -> None:
        # Build a field with a single unbalanced edge.
        field = net_flux_from_edges(3, [(0, 1, 1.0)], require_divergence_free=False)
        # Assert the disagreement is reported.
        with self.assertRaises(LemmaViolation):
            circulation(field, validate_partition(["A", "B", "C"], 3))

    # Verify empty boundaries report an undefined density.
    def test_empty_boundary_undefined(self) -> None:
        # Build a triangle cycle plus a vertex carrying no flux.
        field = net_flux_from_edges(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)])
        # Put the triangle in A and B and the lone vertex in C.
        report = circulation(field, validate_partition(["A", "B", "B", "C"], 4))
        # Assert B-C and C-A are undefined.
        self.assertEqual(report.undefined, (False, True, True))
        # Assert the circulation is zero.
        self.assertEqual(report.circulation, 0.0)


# Validate the exhaustive search.
class TestBruteForce(unittest.TestCase):
    # Verify the Stirling numbers.
    def test_stirling(self) -> None:
        # Assert the first values of S(n, 3).
        self.assertEqual([stirling3(n) for n in range(3, 9)], [1, 6, 25, 90, 301, 966])
        # Assert the enumeration size matches.
        self.assertEqual(len(list(iter_partitions(6))), 90)

    # Verify enumeration yields each unordered partition once.
    def test_enumeration_unique(self) -> None:
        # Collect partitions as sets of parts.
        seen = {validate_partition(labels, 5).as_sets() for labels in iter_partitions(5)}
        # Assert no duplicates.
        self.assertEqual(len(seen), stirling3(5))

    # Verify the hexagon optima.
    def test_hexagon(self) -> None:
        # Search without and with the connectivity constraint.
        free = brute_force_cmax(hexagon_field())
        connected = brute_force_cmax(hexagon_field(), connected_only=True)
        # Assert the unrestricted optimum is the alternating partition.
        self.assertEqual(free.value, 2.0)
        self.assertEqual(free.best, validate_partition(ALTERNATING, 6))
        # Assert the connected optimum is 1.
        self.assertEqual(connected.value, 1.0)
        # Assert every partition was examined.
        self.assertEqual((free.count_examined, connected.count_examined), (90, 90))

    # Verify the thread pool returns the same optimum.
    def test_workers(self) -> None:
        # Search with one and three workers.
        single = brute_force_cmax(hexagon_field())
        pooled = brute_force_cmax(hexagon_field(), workers=3)
        # Assert identical results.
        self.assertEqual(single, pooled)

    # Verify the density objective.
    def test_f_min_objective(self) -> None:
        # Maximise the minimum density flux.
        result = brute_force_cmax(hexagon_field(), objective="f_min")
        # Assert no partition beats density 1.
        self.assertEqual(result.value, 1.0)

    # Verify the size limit.
    def test_too_large(self) -> None:
        # Assert the default cap rejects 13 vertices.
        with self.assertRaises(TooLarge):
            brute_force_cmax(NetFluxField.from_matrix(np.zeros((13, 13))))

    # Verify tiny inputs are rejected.
    def test_too_small(self) -> None:
        # Assert two vertices cannot be split in three.
        with self.assertRaises(BadLength):
            brute_force_cmax(NetFluxField.from_matrix(np.zeros((2, 2))))


# Allow running the tests directly.
if __name__ == "__main__":
    # Run the test suite.
    unittest.main()
