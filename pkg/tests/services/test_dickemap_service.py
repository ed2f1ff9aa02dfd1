"""
Tests for the Dicke bootstrap, Pauli machinery, qubit-side KL checks and transversal gates
"""
from itertools import product
import math

import numpy as np
import pytest

from spincodes.core.exceptions import InvalidInputError, NotTransversalError, ResourceLimitError
from spincodes.features.angular import GateAction, HalfInt
from spincodes.features.bindihedral import Irrep, element_by_name, identity, support_lattice
from spincodes.features.dickemap import (
    DENSE,
    LATTICE,
    SYMMETRIC,
    MultiqubitCode,
    PauliClass,
    PauliString,
    bootstrap,
    certify_group,
    class_matrix,
    dicke_dense,
    from_document,
    intertwiner_check,
    load_document,
    multiqubit_kl_check,
    pauli_apply,
    pauli_classes,
    pauli_dense,
    sph_error_dense,
    sph_expansion,
    sym_class_dense,
    sym_matrix_element,
    tensor_power_apply,
    to_document,
    transversal_action,
)
from spincodes.features.families import family_d3
from spincodes.features.klengine import SpinCode, kl_check_full

HALF = HalfInt(1)


def _random_code(rep: Irrep, j: HalfInt, rng) -> SpinCode:
    x = rng.standard_normal(len(support_lattice(rep, j)))
    return SpinCode.from_amplitudes(rep, j, x / np.linalg.norm(x))


@pytest.mark.unit
class TestDickeStates:
    """Test suite for the bootstrap and Dicke vectors."""

    def test_dicke_dense(self):
        """Test |D_2^3> = (|011> + |101> + |110>) / sqrt(3)."""
        vector = dicke_dense(3, 2)
        expected = np.zeros(8)
        expected[[3, 5, 6]] = 1 / math.sqrt(3)
        assert np.allclose(vector, expected)

    def test_dicke_orthonormal(self):
        """Test the Dicke states of 6 qubits are orthonormal."""
        basis = np.stack([dicke_dense(6, w) for w in range(7)], axis=1)
        assert np.allclose(basis.T @ basis, np.eye(7))

    def test_bootstrap_weights(self, spin_code11):
        """Test w = j - m on the ((11,2,3)) preimage."""
        # Act
        code = bootstrap(spin_code11, d=3)

        # Assert
        assert code.n == 11
        assert set(code.amp0) == {3, 11}
        assert code.amp1 == {8: code.amp0[3], 0: code.amp0[11]}
        assert code.spin_code().amp0 == spin_code11.amp0

    def test_dense_vectors_match_dicke_vectors(self, code11):
        """Test that the 2^n codewords project back onto the Dicke amplitudes."""
        zero, one = code11.dense_vectors()
        basis = np.stack([dicke_dense(11, w) for w in range(12)], axis=1)
        dicke_zero, dicke_one = code11.dicke_vectors()
        assert np.allclose(basis.T @ zero, dicke_zero)
        assert np.allclose(basis.T @ one, dicke_one)

    def test_incongruent_support_rejected(self, rep43):
        """Test that weights must agree mod 2b."""
        with pytest.raises(InvalidInputError):
            MultiqubitCode(n=11, amp0={3: math.sqrt(0.5), 4: math.sqrt(0.5)}, rep=rep43)

    def test_labelings(self, code11):
        """Test that the swapped labeling exchanges the lattice codewords."""
        lattice_zero, lattice_one = code11.presented(LATTICE)
        swapped_zero, swapped_one = code11.presented()
        assert swapped_zero == lattice_one
        assert swapped_one == lattice_zero

    def test_dense_guard(self):
        """Test the dense Dicke state guard."""
        with pytest.raises(ResourceLimitError):
            dicke_dense(21, 3)


@pytest.mark.unit
class TestPaulis:
    """Test suite for Pauli strings and their symmetrizations."""

    def test_apply_matches_dense(self, rng):
        """Test pauli_apply against the dense operator."""
        v = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        for letters in ("XIII", "IYZI", "ZZZZ", "XYZY"):
            E = PauliString(letters)
            assert np.allclose(pauli_apply(E, v), pauli_dense(E) @ v)

    def test_single_qubit_matrices(self):
        """Test X, Y and Z on one qubit."""
        assert np.allclose(pauli_dense(PauliString("X")), [[0, 1], [1, 0]])
        assert np.allclose(pauli_dense(PauliString("Y")), [[0, -1j], [1j, 0]])
        assert np.allclose(pauli_dense(PauliString("Z")), [[1, 0], [0, -1]])

    def test_classes(self):
        """Test class enumeration and orbit sizes."""
        classes = pauli_classes(2, 5)
        assert len(classes) == 3 + 6
        assert classes[0].label == "X1Y0Z0"
        cls = PauliClass(1, 1, 0)
        assert cls.orbit_size(5) == len(list(cls.orbit(5))) == 20

    def test_bad_letters(self):
        """Test the alphabet check."""
        with pytest.raises(InvalidInputError):
            PauliString("XQ")

    def test_sph_expansion_of_xyz(self):
        """Test Sph(XYZ) = (6 XYZ + 6i XX - 6i YY + 6i ZZ + 3i I) / 27 over classes."""
        # Act
        coefficients = sph_expansion(PauliString("XYZ"))

        # Assert
        expected = {
            PauliClass(1, 1, 1): 6 / 27,
            PauliClass(2, 0, 0): 6j / 27,
            PauliClass(0, 2, 0): -6j / 27,
            PauliClass(0, 0, 2): 6j / 27,
            PauliClass(0, 0, 0): 3j / 27,
        }
        assert set(coefficients) == set(expected)
        for cls, value in expected.items():
            assert coefficients[cls] == pytest.approx(value, abs=1e-12)

    def test_sym_matrix_element_matches_dense(self):
        """Test the counting formula against dense symmetrization, all classes of weight < 5, n <= 10."""
        for n in range(1, 11):
            dicke = np.stack([dicke_dense(n, w) for w in range(n + 1)], axis=1)
            for cls in pauli_classes(4, n, include_identity=True):
                expected = dicke.T @ sym_class_dense(cls, n) @ dicke
                counted = np.array([
                    [sym_matrix_element(n, w_bra, cls, w_ket) for w_ket in range(n + 1)]
                    for w_bra in range(n + 1)
                ])
                assert np.max(np.abs(counted - expected)) < 1e-10, f"{cls} on {n} qubits"

    def test_sph_expansion_structure(self):
        """Test Sph(E) for every error of weight <= 3 on n <= 6 qubits.

        Only classes up to weight(E) appear, Sym(E) carries a positive coefficient,
        the expansion ignores where the letters sit and it rebuilds Sph(E).
        """
        for n in range(1, 7):
            for weight in range(1, min(3, n) + 1):
                for word in product("XYZ", repeat=weight):
                    # Arrange
                    letters = "".join(word)
                    front = PauliString(letters + "I" * (n - weight))
                    back = PauliString("I" * (n - weight) + letters)

                    # Act
                    coefficients = sph_expansion(front)
                    moved = sph_expansion(back)

                    # Assert
                    assert set(coefficients) == set(moved)
                    for cls, value in coefficients.items():
                        assert cls.weight <= weight
                        assert moved[cls] == pytest.approx(value, abs=1e-12)
                    top = coefficients[front.pauli_class()]
                    assert top.real > 0
                    assert abs(top.imag) < 1e-12
                    rebuilt = sum(value * sym_class_dense(cls, n) for cls, value in coefficients.items())
                    assert np.allclose(rebuilt, sph_error_dense(front), atol=1e-10)

    def test_single_z_expectation(self):
        """Test <D_8^11| Sym(Z) |D_8^11> = -5/11."""
        value = sym_matrix_element(11, 8, PauliClass(0, 0, 1), 8)
        assert value == pytest.approx(-5 / 11)

    def test_class_matrix_of_z_is_diagonal(self, code11):
        """Test Sym(Z) = diag((n - 2w) / n) in the Dicke basis."""
        matrix = class_matrix(code11, PauliClass(0, 0, 1))
        assert np.allclose(matrix, np.diag([(11 - 2 * w) / 11 for w in range(12)]))

    def test_operator_guard(self):
        """Test the dense operator guard."""
        with pytest.raises(ResourceLimitError):
            pauli_dense(PauliString("X" * 11))


@pytest.mark.unit
class TestMultiqubitKL:
    """Test suite for the dense and symmetric KL checks."""

    def test_dense_eleven_qubits_passes(self, code11):
        """Test all 528 errors of weight <= 2."""
        # Act
        report = multiqubit_kl_check(code11, 3, mode=DENSE, tol=1e-10)

        # Assert
        assert len(report.conditions) == 1056
        assert report.passed

    def test_symmetric_eleven_qubits_passes(self, code11, code13):
        """Test the class-level check on Code 1 at b = 4, 5."""
        for code in (code11, code13):
            report = multiqubit_kl_check(code, 3, mode=SYMMETRIC, tol=1e-10, max_workers=2)
            assert len(report.conditions) == 2 * 9
            assert report.passed

    def test_distance_four_fails(self, code11):
        """Test that a weight-3 error breaks the code."""
        report = multiqubit_kl_check(code11, 4, mode=SYMMETRIC, tol=1e-10)
        assert not report.passed

    def test_modes_agree(self, code11):
        """Test that dense and symmetric maxima coincide."""
        for d in (3, 4):
            dense = multiqubit_kl_check(code11, d, mode=DENSE)
            symmetric = multiqubit_kl_check(code11, d, mode=SYMMETRIC)
            assert symmetric.max_residual == pytest.approx(dense.max_residual, abs=1e-12)

    def test_spin_and_qubit_checks_agree(self, rng):
        """Test that the bootstrap preserves pass/fail at d = 3."""
        for rep, twice in ((Irrep(4, 2), 13), (Irrep(5, 3), 17), (Irrep(3, 2), 9)):
            spin = family_d3(rep, HalfInt(twice))
            assert kl_check_full(spin, 3).passed
            assert multiqubit_kl_check(bootstrap(spin, d=3), 3).passed

            noisy = _random_code(rep, HalfInt(twice + 8), rng)
            assert not kl_check_full(noisy, 3).passed
            assert not multiqubit_kl_check(bootstrap(noisy, d=3), 3).passed

    @pytest.mark.slow
    def test_spin_and_dense_checks_agree(self, rng):
        """Test spin pass <=> dense qubit pass at d = 3, 5 for codes on up to 12 qubits."""
        # Arrange
        codes = [family_d3(rep, HalfInt(twice)) for rep, twice in ((Irrep(3, 2), 9), (Irrep(3, 2), 11), (Irrep(4, 3), 11))]
        for rep, twice in (
            (Irrep(1, 1), 5), (Irrep(2, 1), 7), (Irrep(2, 2), 7), (Irrep(3, 2), 9), (Irrep(1, 1), 9),
            (Irrep(4, 3), 11), (Irrep(3, 1), 11), (Irrep(2, 2), 11), (Irrep(5, 3), 9), (Irrep(4, 2), 11),
        ):
            codes.append(_random_code(rep, HalfInt(twice), rng))

        for spin in codes:
            qubits = bootstrap(spin, d=3)
            assert qubits.n <= 12
            for d in (3, 5):
                # Act
                spin_passed = kl_check_full(spin, d).passed
                dense_passed = multiqubit_kl_check(qubits, d, mode=DENSE).passed

                # Assert
                assert spin_passed == dense_passed, f"{spin.rep} at j={spin.j}, d={d}"
        assert all(kl_check_full(spin, 3).passed for spin in codes[:3])

    def test_dense_guard(self, rep43):
        """Test the dense-mode qubit guard."""
        big = bootstrap(family_d3(rep43, HalfInt(27)), d=3)
        with pytest.raises(ResourceLimitError):
            multiqubit_kl_check(big, 3, mode=DENSE)

    def test_unknown_mode(self, code11):
        """Test the mode check."""
        with pytest.raises(InvalidInputError):
            multiqubit_kl_check(code11, 3, mode="sampled")


@pytest.mark.unit
class TestTransversal:
    """Test suite for the intertwiner and logical gate certification."""

    def test_tensor_power_matches_kron(self, rng):
        """Test U^{⊗3} against np.kron."""
        single = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        state = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        dense = np.kron(np.kron(single, single), single)
        assert np.allclose(tensor_power_apply(single, state, 3), dense @ state)

    def test_intertwiner(self):
        """Test D D^j(g) = g^{⊗n} D for X, Y, Z and a phase gate."""
        for n in range(1, 7):
            for gate in (GateAction("X", HALF), GateAction("Y", HALF), GateAction("Z", HALF), GateAction("Ph", HALF, 0.7)):
                assert intertwiner_check(n, gate) < 1e-12

    def test_intertwiner_random_phases(self, rng):
        """Test the phase gate intertwiner at 20 random angles on 6 qubits."""
        for alpha in rng.uniform(0, 2 * math.pi, 20):
            assert intertwiner_check(6, GateAction("Ph", HALF, float(alpha))) < 1e-12

    def test_t_gate_on_eleven_qubits(self, code11, rep43):
        """Test that T^{⊗11} acts as delta_3(T)."""
        # Act
        report = transversal_action(code11, element_by_name(4, "T"))

        # Assert
        assert report.certified
        assert report.leakage < 1e-12
        assert report.logical[0][1] == pytest.approx((0.0, 0.0))

    def test_phase_gate_on_thirteen_qubits(self, code13):
        """Test Ph(pi/5) on the exotic BD_10 code."""
        assert transversal_action(code13, element_by_name(5, "P")).certified

    def test_identity_is_logical_identity(self, code11):
        """Test that the identity acts trivially."""
        report = transversal_action(code11, identity(4))
        assert report.certified
        assert np.allclose(
            [[complex(*entry) for entry in row] for row in report.logical], np.eye(2), atol=1e-12
        )

    def test_full_groups(self, code11, code13):
        """Test every element of BD_8 and BD_10."""
        for code, order in ((code11, 32), (code13, 40)):
            certificate = certify_group(code, all_elements=True)
            assert certificate.certified
            assert certificate.group_order_checked == order
            assert certificate.closure_deviation < 1e-12

    def test_generators_by_default(self, code11):
        """Test that X, Z and Ph(pi/b) are checked by default."""
        certificate = certify_group(code11)
        assert [gate.element for gate in certificate.gates] == ["X", "Ph(pi/4)^4", "Ph(pi/4)"]
        assert certificate.certified

    def test_wrong_irrep_not_certified(self, code11):
        """Test that delta_3 amplitudes labeled delta_1 fail certification."""
        mislabeled = MultiqubitCode(n=11, amp0=dict(code11.amp0), rep=Irrep(4, 1), d=3)
        certificate = certify_group(mislabeled)
        assert not certificate.certified
        assert all(gate.leakage < 1e-12 for gate in certificate.gates)

    def test_leakage_raises(self, code11, mocker):
        """Test that a gate moving the codespace is refused."""
        mocker.patch(
            "spincodes.features.dickemap.transversal.spin_gate_matrix",
            return_value=np.roll(np.eye(12), 1, axis=0),
        )
        with pytest.raises(NotTransversalError):
            transversal_action(code11, element_by_name(4, "X"))

    def test_requires_provenance(self, code11):
        """Test that codes without a spin origin are refused."""
        bare = MultiqubitCode(n=11, amp0=dict(code11.amp0))
        with pytest.raises(InvalidInputError):
            transversal_action(bare, element_by_name(4, "X"))
        with pytest.raises(InvalidInputError):
            certify_group(bare)

    def test_element_from_other_group(self, code11):
        """Test that BD_10 elements do not act on a BD_8 code."""
        with pytest.raises(InvalidInputError):
            transversal_action(code11, element_by_name(5, "X"))


@pytest.mark.unit
class TestSerialization:
    """Test suite for code documents."""

    def test_document_fields(self, code11):
        """Test the swapped-labeled document of Code 1 at b = 4."""
        # Act
        document = to_document(code11, residuals={"kl_max": 0.0})

        # Assert
        assert (document.n, document.K, document.d, document.j) == (11, 2, 3, "11/2")
        assert [entry.weight for entry in document.codewords] == [0, 8]
        assert [entry.exact for entry in document.codewords] == ["sqrt(5)/4", "sqrt(11)/4"]
        assert document.group.degree == 8
        assert document.labeling == "swapped"

    def test_round_trip_through_file(self, code11, tmp_path):
        """Test write, load and rebuild in both labelings."""
        for labeling in ("swapped", "lattice"):
            # Arrange
            path = tmp_path / f"code11_{labeling}.json"
            path.write_text(to_document(code11, labeling=labeling).model_dump_json(indent=2))

            # Act
            rebuilt = from_document(load_document(str(path)))

            # Assert
            assert rebuilt.amp0 == pytest.approx(code11.amp0, abs=1e-15)
            assert (rebuilt.n, rebuilt.d, rebuilt.rep) == (11, 3, code11.rep)
            assert rebuilt.exact == code11.exact

    def test_requires_provenance(self, code11):
        """Test that bare codes do not serialize."""
        with pytest.raises(InvalidInputError):
            to_document(MultiqubitCode(n=11, amp0=dict(code11.amp0)))
