"""
Tests for the angular-momentum kernels
"""
from fractions import Fraction
import math

import numpy as np
import pytest
from sympy import Rational, expand, sign
from sympy.physics.wigner import clebsch_gordan

from spincodes.core.exceptions import InvalidInputError, OutOfRangeError
from spincodes.features.angular import (
    GateAction,
    HalfInt,
    cg,
    conjugation_rule,
    decompose_product,
    gate_apply,
    gate_matrix,
    spherical_tensor,
    tensor_components,
    tensor_matrix,
)

HALF = HalfInt(1)


def _rational(x: HalfInt) -> Rational:
    return Rational(x.twice, 2)


@pytest.mark.unit
class TestHalfInt:
    """Test suite for HalfInt."""

    def test_parse_round_trip(self):
        """Test parsing and printing of half-integers."""
        for text in ("11/2", "-3/2", "4", "0"):
            assert str(HalfInt.parse(text)) == text

    def test_parse_rejects_thirds(self):
        """Test that non-half-integers are rejected."""
        with pytest.raises(InvalidInputError):
            HalfInt.parse("1/3")

    def test_arithmetic(self):
        """Test addition and comparison with ints."""
        # Arrange
        j = HalfInt.parse("11/2")

        # Act
        shifted = j - 8

        # Assert
        assert shifted == HalfInt(-5)
        assert j > 5
        assert j.is_half_integral


@pytest.mark.unit
class TestClebschGordan:
    """Test suite for cg."""

    def test_highest_weight(self):
        """Test <1/2 1/2; 1/2 1/2 | 1 1> = 1."""
        value = cg(HALF, HALF, HALF, HALF, HalfInt(2), HalfInt(2))
        assert value.sign == 1
        assert value.radicand == 1

    def test_selection_rule(self):
        """Test that M != m1 + m2 gives zero."""
        value = cg(HALF, HALF, HALF, HALF, HalfInt(2), HalfInt(0))
        assert value.is_zero

    def test_triplet_zero(self):
        """Test <1/2 1/2; 1/2 -1/2 | 1 0> = +sqrt(1/2)."""
        value = cg(HALF, HALF, HALF, -HALF, HalfInt(2), HalfInt(0))
        assert value.sign == 1
        assert value.radicand == Fraction(1, 2)

    def test_malformed_pair_raises(self):
        """Test that j - m must be an integer."""
        with pytest.raises(InvalidInputError):
            cg(HALF, HalfInt(0), HALF, HALF, HalfInt(2), HalfInt(1))

    def test_agrees_with_sympy(self):
        """Test every coefficient with j1, j2 <= 4 exactly against sympy."""
        spins = [HalfInt(t) for t in range(0, 9)]
        for j1 in spins:
            for j2 in spins:
                for J in (HalfInt(t) for t in range(abs(j1.twice - j2.twice), j1.twice + j2.twice + 1, 2)):
                    for tm1 in range(-j1.twice, j1.twice + 1, 2):
                        for tm2 in range(-j2.twice, j2.twice + 1, 2):
                            m1, m2 = HalfInt(tm1), HalfInt(tm2)
                            M = m1 + m2
                            if abs(M.twice) > J.twice:
                                continue
                            expected = clebsch_gordan(
                                _rational(j1), _rational(j2), _rational(J),
                                _rational(m1), _rational(m2), _rational(M),
                            )
                            value = cg(j1, m1, j2, m2, J, M)
                            assert value.sign == int(sign(expected)), (j1, m1, j2, m2, J, M)
                            assert Rational(value.radicand.numerator, value.radicand.denominator) == expand(expected**2)


@pytest.mark.unit
class TestSphericalTensors:
    """Test suite for spherical tensor matrices."""

    def test_rank_zero_is_scaled_identity(self):
        """Test T^0_0 = I / sqrt(2j+1)."""
        j = HalfInt(7)
        assert np.allclose(tensor_matrix(j, 0, 0), np.eye(8) / math.sqrt(8), atol=1e-14)

    def test_rank_one_is_proportional_to_m(self):
        """Test T^1_0 = -sqrt(3 / ((2j+1) j (j+1))) diag(m) with the rank in the first slot."""
        # Arrange
        j = HalfInt(3)
        m_values = np.array([1.5, 0.5, -0.5, -1.5])

        # Act
        matrix = tensor_matrix(j, 1, 0)

        # Assert
        factor = math.sqrt(3 / (4 * 1.5 * 2.5))
        assert np.allclose(matrix, -np.diag(factor * m_values), atol=1e-14)

    def test_single_entry_per_column(self):
        """Test that column m only has an entry in row m+q."""
        j = HalfInt(5)
        tensor = spherical_tensor(j, 3, 2)
        for row, col, _ in tensor.entries:
            assert row == col - 2

    def test_top_rank(self):
        """Test that k = 2j is a valid rank."""
        for twice in range(1, 8):
            j = HalfInt(twice)
            for q in range(-twice, twice + 1):
                tensor = spherical_tensor(j, twice, q)
                assert tensor.entries
                assert np.linalg.norm(tensor_matrix(j, twice, q)) == pytest.approx(1.0)

    def test_orthonormal(self):
        """Test Tr(T^k_q^dagger T^k'_q') = delta over all (k, q) for every j <= 15/2."""
        for twice in range(0, 16):
            # Arrange
            j = HalfInt(twice)
            vectors = np.array([tensor_matrix(j, k, q).ravel() for k, q in tensor_components(twice)])

            # Act
            gram = vectors @ vectors.T

            # Assert
            assert len(vectors) == (twice + 1) ** 2
            assert np.max(np.abs(gram - np.eye(len(vectors)))) < 1e-12, j

    def test_adjoint_symmetry(self):
        """Test T^k_q^dagger = (-1)^q T^k_-q."""
        j = HalfInt(7)
        for k, q in tensor_components(7):
            parity = -1.0 if q % 2 else 1.0
            assert np.allclose(tensor_matrix(j, k, q).T, parity * tensor_matrix(j, k, -q), atol=1e-13)

    def test_out_of_range(self):
        """Test rank and component bounds."""
        with pytest.raises(OutOfRangeError):
            spherical_tensor(HalfInt(3), 4, 0)
        with pytest.raises(OutOfRangeError):
            spherical_tensor(HalfInt(3), 1, 2)

    def test_cached_matrix_is_read_only(self):
        """Test that shared matrices cannot be mutated."""
        matrix = tensor_matrix(HalfInt(3), 1, 1)
        with pytest.raises(ValueError):
            matrix[0, 0] = 1.0


@pytest.mark.unit
class TestGates:
    """Test suite for the spin-j gate actions."""

    def test_fundamental_x(self):
        """Test D^{1/2}(X) = -iX."""
        expected = -1j * np.array([[0, 1], [1, 0]])
        assert np.allclose(gate_matrix(GateAction("X", HALF)), expected)

    def test_fundamental_y(self):
        """Test D^{1/2}(Y) = -iY."""
        expected = -1j * np.array([[0, -1j], [1j, 0]])
        assert np.allclose(gate_matrix(GateAction("Y", HALF)), expected)

    def test_phase_zero_is_identity(self):
        """Test Ph(0) = I on any spin."""
        assert np.allclose(gate_matrix(GateAction("Ph", HalfInt(9), 0.0)), np.eye(10))

    def test_named_aliases(self):
        """Test that T is Ph(pi/4)."""
        gate = GateAction.named("T", HalfInt(3))
        assert gate.name == "Ph"
        assert gate.alpha == pytest.approx(math.pi / 4)

    def test_apply_matches_matrix(self, rng):
        """Test gate_apply against the dense matrix."""
        j = HalfInt(7)
        v = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        for gate in (GateAction("X", j), GateAction("Y", j), GateAction("Z", j), GateAction("Ph", j, 0.3)):
            assert np.allclose(gate_apply(gate, v), gate_matrix(gate) @ v)

    def test_apply_rejects_wrong_dimension(self):
        """Test the dimension guard."""
        with pytest.raises(InvalidInputError):
            gate_apply(GateAction("X", HalfInt(3)), np.ones(3))

    def test_unitary(self):
        """Test unitarity of every gate."""
        j = HalfInt(11)
        for gate in (GateAction("X", j), GateAction("Y", j), GateAction("Z", j), GateAction("Ph", j, 1.1)):
            matrix = gate_matrix(gate)
            assert np.allclose(matrix.conj().T @ matrix, np.eye(12))

    def test_z_flips_odd_components(self):
        """Test D(Z)^dagger T^2_1 D(Z) = -T^2_1 at j = 5/2."""
        j = HalfInt(5)
        D = gate_matrix(GateAction("Z", j))
        T = tensor_matrix(j, 2, 1)
        assert np.allclose(D.conj().T @ T @ D, -T, atol=1e-13)

    def test_conjugation_rules(self, rng):
        """Test every conjugation rule against the matrices for j <= 15/2 and random alpha."""
        for twice in range(1, 16):
            j = HalfInt(twice)
            gates = [GateAction("X", j), GateAction("Y", j), GateAction("Z", j)]
            gates += [GateAction("Ph", j, float(alpha)) for alpha in rng.uniform(0, 2 * math.pi, 3)]
            for gate in gates:
                D = gate_matrix(gate)
                for k, q in tensor_components(twice):
                    # Act
                    phase, q_new = conjugation_rule(gate, k, q)

                    # Assert
                    lhs = D.conj().T @ tensor_matrix(j, k, q) @ D
                    assert np.max(np.abs(lhs - phase * tensor_matrix(j, k, q_new))) < 1e-12


@pytest.mark.unit
class TestProducts:
    """Test suite for decompose_product."""

    def test_identity_factor(self):
        """Test T^0_0 T^k_q = T^k_q / sqrt(2j+1)."""
        j = HalfInt(5)
        coefficients = decompose_product(spherical_tensor(j, 0, 0), spherical_tensor(j, 3, -1))
        assert set(coefficients) == {3}
        assert coefficients[3] == pytest.approx(1 / math.sqrt(6))

    def test_rank_range(self):
        """Test that T^1_0 T^1_0 on j = 1 only has ranks 0..2."""
        j = HalfInt(2)
        coefficients = decompose_product(spherical_tensor(j, 1, 0), spherical_tensor(j, 1, 0))
        assert set(coefficients) <= {0, 1, 2}
        assert 0 in coefficients

    def test_identity_factor_at_top_rank(self):
        """Test T^0_0 T^3_0 = T^3_0 / 2 on j = 3/2."""
        j = HalfInt(3)
        coefficients = decompose_product(spherical_tensor(j, 0, 0), spherical_tensor(j, 3, 0))
        assert set(coefficients) == {3}
        assert coefficients[3] == pytest.approx(0.5)

    def test_small_spins(self):
        """Test every product on j <= 3/2 lands on ranks |k1-k2| <= k <= min(k1+k2, 2j)."""
        for twice in (1, 2, 3):
            j = HalfInt(twice)
            components = list(tensor_components(twice))
            for k1, q1 in components:
                for k2, q2 in components:
                    # Act
                    coefficients = decompose_product(spherical_tensor(j, k1, q1), spherical_tensor(j, k2, q2))

                    # Assert
                    for k in coefficients:
                        assert abs(k1 - k2) <= k <= min(k1 + k2, twice)
                    rebuilt = np.zeros((twice + 1, twice + 1))
                    for k, c in coefficients.items():
                        rebuilt = rebuilt + c * tensor_matrix(j, k, q1 + q2)
                    product = tensor_matrix(j, k1, q1) @ tensor_matrix(j, k2, q2)
                    assert np.max(np.abs(product - rebuilt)) < 1e-12

    def test_reconstruction(self, rng):
        """Test that random products at j = 7/2 reconstruct."""
        j = HalfInt(7)
        components = list(tensor_components(7))
        for _ in range(10):
            (k1, q1), (k2, q2) = (components[i] for i in rng.integers(0, len(components), 2))
            if abs(q1 + q2) > 7:
                continue
            coefficients = decompose_product(spherical_tensor(j, k1, q1), spherical_tensor(j, k2, q2))
            rebuilt = sum(c * tensor_matrix(j, k, q1 + q2) for k, c in coefficients.items())
            product = tensor_matrix(j, k1, q1) @ tensor_matrix(j, k2, q2)
            assert np.max(np.abs(product - rebuilt)) < 1e-12

    def test_mismatched_spins(self):
        """Test that tensors on different spins do not multiply."""
        with pytest.raises(InvalidInputError):
            decompose_product(spherical_tensor(HalfInt(3), 1, 0), spherical_tensor(HalfInt(5), 1, 0))
