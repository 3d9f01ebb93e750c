# Document the purpose of this unit test module.
"""Unit tests for stationary distributions, currents, net flux and chain reconstruction."""

# Allow future annotations for type hints in tests.
from __future__ import annotations

# Import unittest for the test framework.
import unittest

# Import numpy for matrix comparisons.
import numpy as np

# Import the flow field operations under test.
from circa.flowfield import (
    NetFluxField,
    TransitionMatrix,
    center_flux,
    markov_from_flow,
    net_flux,
    positive_part,
    probability_current,
    stationary_distribution,
)
# Import the errors the operations raise.
from circa.utils.errors import (
    DimensionMismatch,
    InfeasibleMass,
    NegativeEntry,
    NotDivergenceFree,
    NotErgodic,
    NotRowStochastic,
)
# Import shared builders.
from tests.support import hexagon_field, random_divergence_free


# Run the full forward chain on a transition matrix.
def _flux_of(tm: TransitionMatrix) -> NetFluxField:
    return net_flux(probability_current(tm, stationary_distribution(tm)))


# Validate transition matrix construction.
class TestTransitionMatrix(unittest.TestCase):
    # Verify negative probabilities are rejected.
    def test_negative_entry(self) -> None:
        # Assert the negative entry is reported.
        with self.assertRaises(NegativeEntry) as ctx:
            TransitionMatrix.from_rows([[1.1, -0.1], [0.5, 0.5]])
        # Assert the location is carried in the details.
        self.assertEqual((ctx.exception.details["row"], ctx.exception.details["col"]), (0, 1))

    # Verify rows must sum to one.
    def test_not_row_stochastic(self) -> None:
        # Assert a short row is rejected.
        with self.assertRaises(NotRowStochastic):
            TransitionMatrix.from_rows([[0.5, 0.4], [0.5, 0.5]])

    # Verify printed rows can be rescaled.
    def test_normalize_rows(self) -> None:
        # Build a matrix with rounded thirds.
        tm = TransitionMatrix.from_rows([[0, 0.333, 0.333, 0.333], [1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0]], normalize_rows=True)
        # Assert the first row became exact thirds.
        np.testing.assert_allclose(tm.entries[0], [0, 1 / 3, 1 / 3, 1 / 3])

    # Verify reducible chains are rejected.
    def test_not_ergodic(self) -> None:
        # Assert an absorbing state breaks ergodicity.
        with self.assertRaises(NotErgodic):
            TransitionMatrix.from_rows([[0.5, 0.5], [0.0, 1.0]])

    # Verify non-square input is rejected.
    def test_dimension_mismatch(self) -> None:
        # Assert a 2x3 matrix is rejected.
        with self.assertRaises(DimensionMismatch):
            TransitionMatrix.from_rows([[0.5, 0.5, 0.0], [0.5, 0.5, 0.0]])

    # Verify the stored entries are read-only.
    def test_entries_frozen(self) -> None:
        # Build a small chain.
        tm = TransitionMatrix.from_rows([[0.5, 0.5], [0.5, 0.5]])
        # Assert writes fail.
        with self.assertRaises(ValueError):
            tm.entries[0, 0] = 1.0


# Validate the stationary solve.
class TestStationaryDistribution(unittest.TestCase):
    # Verify the two-cycle gives equal mass.
    def test_two_cycle(self) -> None:
        # Solve the periodic two-cycle.
        pi = stationary_distribution(TransitionMatrix.from_rows([[0, 1], [1, 0]]))
        # Assert both states get one half.
        np.testing.assert_allclose(pi.probabilities, [0.5, 0.5], atol=1e-12)

    # Verify doubly stochastic chains have the uniform distribution.
    def test_doubly_stochastic(self) -> None:
        # Build a circulant chain.
        tm = TransitionMatrix.from_rows([[0.2, 0.5, 0.3], [0.3, 0.2, 0.5], [0.5, 0.3, 0.2]])
        # Solve for the stationary distribution.
        pi = stationary_distribution(tm)
        # Assert the distribution is uniform.
        np.testing.assert_allclose(pi.probabilities, [1 / 3] * 3, atol=1e-12)
        # Assert the residual was post-checked.
        self.assertLess(pi.residual, 1e-9)

    # Verify the vector is a fixed point on a random chain.
    def test_fixed_point(self) -> None:
        # Draw a dense random chain.
        rng = np.random.default_rng(3)
        rows = rng.uniform(0.1, 1.0, size=(5, 5))
        tm = TransitionMatrix.from_rows(rows / rows.sum(axis=1, keepdims=True))
        # Solve for the stationary distribution.
        pi = stationary_distribution(tm)
        # Assert pi^T Pi = pi^T.
        np.testing.assert_allclose(pi.probabilities @ tm.entries, pi.probabilities, atol=1e-12)
        # Assert the vector sums to one.
        self.assertAlmostEqual(float(pi.probabilities.sum()), 1.0, places=12)


# Validate currents and net flux.
class TestCurrentsAndFlux(unittest.TestCase):
    # Verify the current is diag(pi) Pi.
    def test_probability_current(self) -> None:
        # Build a symmetric three-state chain.
        tm = TransitionMatrix.from_rows([[0, 0.5, 0.5], [0.5, 0, 0.5], [0.5, 0.5, 0]])
        # Compute the current.
        current = probability_current(tm, stationary_distribution(tm))
        # Assert P = Pi / 3.
        np.testing.assert_allclose(current.entries, tm.entries / 3, atol=1e-12)

    # Verify mismatched sizes are rejected.
    def test_current_dimension_mismatch(self) -> None:
        # Build chains of two sizes.
        small = TransitionMatrix.from_rows([[0, 1], [1, 0]])
        large = TransitionMatrix.from_rows([[0, 0.5, 0.5], [0.5, 0, 0.5], [0.5, 0.5, 0]])
        # Assert the mismatch is reported.
        with self.assertRaises(DimensionMismatch):
            probability_current(large, stationary_distribution(small))

    # Verify reversible chains carry no net flux.
    def test_symmetric_chain_has_zero_flux(self) -> None:
        # Compute the flux of a symmetric chain.
        field = _flux_of(TransitionMatrix.from_rows([[0, 0.5, 0.5], [0.5, 0, 0.5], [0.5, 0.5, 0]]))
        # Assert every pair is zero.
        self.assertEqual(field.support_pairs(), [])

    # Verify three-state fluxes share one magnitude.
    def test_three_state_equal_magnitudes(self) -> None:
        # Compute the flux of an irreversible three-state chain.
        field = _flux_of(TransitionMatrix.from_rows([[0.1, 0.6, 0.3], [0.2, 0.3, 0.5], [0.4, 0.4, 0.2]]))
        # Collect the three cyclic fluxes.
        cyclic = [field.flux(0, 1), field.flux(1, 2), field.flux(2, 0)]
        # Assert they agree exactly up to rounding.
        np.testing.assert_allclose(cyclic, [cyclic[0]] * 3, atol=1e-12)
        # Assert the common value is not zero.
        self.assertGreater(abs(cyclic[0]), 1e-3)

    # Verify antisymmetry is structural.
    def test_antisymmetry(self) -> None:
        # Build a field from a random divergence-free matrix.
        field = NetFluxField.from_matrix(random_divergence_free(6, np.random.default_rng(1)))
        # Assert F + F^T is exactly zero.
        self.assertTrue(np.array_equal(field.matrix + field.matrix.T, np.zeros((6, 6))))

    # Verify divergent fields are rejected.
    def test_not_divergence_free(self) -> None:
        # Assert a single directed edge is rejected.
        with self.assertRaises(NotDivergenceFree):
            NetFluxField.from_matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])

    # Verify near-zero entries are snapped.
    def test_snap_small_flux(self) -> None:
        # Build a cycle field with rounding noise on one pair.
        matrix = np.array([[0, 1, -1, 1e-14], [-1, 0, 1, 0], [1, -1, 0, 0], [-1e-14, 0, 0, 0]])
        field = NetFluxField.from_matrix(matrix)
        # Assert the noisy pair is not in the support.
        self.assertNotIn((0, 3), field.support_pairs())

    # Verify the positive part of the hexagon field.
    def test_positive_part_hexagon(self) -> None:
        # Compute F_+ of the hexagon.
        plus = positive_part(hexagon_field())
        # Assert ones sit exactly on the cycle edges.
        expected = np.zeros((6, 6))
        for k in range(6):
            expected[k, (k + 1) % 6] = 1.0
        np.testing.assert_array_equal(plus, expected)

    # Verify F = F_+ - F_+^T.
    def test_positive_part_reconstructs(self) -> None:
        # Build a random field.
        field = NetFluxField.from_matrix(random_divergence_free(5, np.random.default_rng(2)))
        # Compute F_+.
        plus = positive_part(field)
        # Assert the reconstruction.
        np.testing.assert_allclose(plus - plus.T, field.matrix, atol=1e-15)

    # Verify centering removes divergence.
    def test_center_flux(self) -> None:
        # Build a divergent antisymmetric matrix.
        raw = np.array([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], dtype=float)
        # Assert the centered matrix passes validation.
        field = NetFluxField.from_matrix(center_flux(raw))
        # Assert the row sums vanish.
        self.assertLess(field.max_divergence(), 1e-12)


# Validate chain reconstruction from a flux field.
class TestMarkovFromFlow(unittest.TestCase):
    # Verify the three-state round trip with uniform mass.
    def test_three_state_round_trip(self) -> None:
        # Build the gamma = 0.1 cycle.
        gamma = 0.1
        field = NetFluxField.from_matrix(gamma * np.array([[0, 1, -1], [-1, 0, 1], [1, -1, 0]]))
        # Reconstruct the chain with mass spread over every entry.
        tm = markov_from_flow(field, mass_placement="uniform-all")
        # Assert the flux is recovered.
        np.testing.assert_allclose(_flux_of(tm).matrix, field.matrix, atol=1e-12)

    # Verify the zero field gives a symmetric ergodic chain.
    def test_zero_field(self) -> None:
        # Reconstruct from a zero field.
        tm = markov_from_flow(NetFluxField.from_matrix(np.zeros((4, 4))))
        # Assert the chain is symmetric.
        np.testing.assert_allclose(tm.entries, tm.entries.T, atol=1e-15)
        # Assert the flux round-trips to zero.
        self.assertEqual(_flux_of(tm).support_pairs(), [])

    # Verify the equality branch uses the positive part alone.
    def test_equality_branch(self) -> None:
        # Scale the hexagon to unit positive mass.
        field = hexagon_field().scaled(1 / 6)
        # Reconstruct the chain.
        tm = markov_from_flow(field)
        # Assert the chain is the deterministic rotation.
        np.testing.assert_allclose(tm.entries, positive_part(field) * 6, atol=1e-12)
        # Assert the flux is recovered.
        np.testing.assert_allclose(_flux_of(tm).matrix, field.matrix, atol=1e-12)

    # Verify excess positive mass is rejected.
    def test_infeasible_mass(self) -> None:
        # Assert the unscaled hexagon is infeasible.
        with self.assertRaises(InfeasibleMass):
            markov_from_flow(hexagon_field())

    # Verify unknown placements are rejected.
    def test_unknown_placement(self) -> None:
        # Assert a typo is rejected.
        with self.assertRaises(ValueError):
            markov_from_flow(hexagon_field().scaled(0.1), mass_placement="diagonal")


# Allow running the tests directly.
if __name__ == "__main__":
    # Run the test suite.
    unittest.main()
