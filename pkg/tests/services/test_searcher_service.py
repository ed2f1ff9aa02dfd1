"""
Tests for the quadratic system, the restart solver and the code search service
"""
import math

import numpy as np
import pytest

from spincodes.core.exceptions import InvalidInputError, NoDegreesOfFreedomError, RankOverflowError, SearchExhaustedError
from spincodes.features.angular import HalfInt
from spincodes.features.bindihedral import Irrep
from spincodes.features.dickemap import SYMMETRIC, multiqubit_kl_check
from spincodes.features.searcher import (
    QuadraticSystem,
    build_system,
    canonicalize,
    code_search_service,
    definite_forms,
    not_found_report,
    search_code,
    solve,
)
from spincodes.features.searcher import solver
from spincodes.models.schemas import SearchConfig


@pytest.mark.unit
class TestQuadraticSystem:
    """Test suite for build_system."""

    def test_eleven_qubit_form(self, rep43):
        """Test the single d=3 form: diagonal with ratio -5/11."""
        # Act
        system = build_system(rep43, HalfInt(11), 3)

        # Assert
        assert (system.nu, system.mu) == (1, 2)
        form = system.forms[0]
        assert abs(form[0, 1]) < 1e-15
        assert form[0, 0] / form[1, 1] == pytest.approx(-5 / 11)

    def test_residuals_match_kl_values(self, spin_code11, rep43):
        """Test that the closed-form code zeroes every form."""
        system = build_system(rep43, HalfInt(11), 3)
        x = np.array([spin_code11.amp0[m] for m in system.lattice])
        assert np.max(np.abs(system.residuals(x))) < 1e-14

    def test_jacobian_matches_finite_differences(self, rep43, rng):
        """Test J = 2 B x against central differences."""
        system = build_system(rep43, HalfInt(27), 5)
        x = rng.standard_normal(system.dim)
        h = 1e-6
        numeric = np.column_stack([
            (system.residuals(x + h * e) - system.residuals(x - h * e)) / (2 * h)
            for e in np.eye(system.dim)
        ])
        assert np.allclose(system.jacobian(x), numeric, atol=1e-6)

    def test_tangent_jacobian_kills_radial_direction(self, rep43, rng):
        """Test J_t x = 0 on the sphere."""
        system = build_system(rep43, HalfInt(27), 5)
        x = rng.standard_normal(system.dim)
        x /= np.linalg.norm(x)
        assert np.max(np.abs(system.tangent_jacobian(x) @ x)) < 1e-12

    def test_build_errors(self, rep43):
        """Test the empty-lattice and rank guards."""
        with pytest.raises(NoDegreesOfFreedomError):
            build_system(Irrep(4, 4), HalfInt(1), 1)
        with pytest.raises(RankOverflowError):
            build_system(rep43, HalfInt(11), 13)

    def test_small_spin_forms(self):
        """Test that ranks above j are allowed up to 2j."""
        for twice, d, dim in ((5, 5, 3), (7, 7, 4)):
            system = build_system(Irrep(1, 1), HalfInt(twice), d)
            assert system.dim == dim
            assert system.forms
            assert all(form.shape == (dim, dim) for form in system.forms)

    def test_asymmetric_form_rejected(self):
        """Test the symmetry check."""
        with pytest.raises(InvalidInputError):
            QuadraticSystem(dim=2, forms=(np.array([[0.0, 1.0], [0.0, 0.0]]),))

    def test_definite_forms(self):
        """Test that only a definite form is flagged."""
        system = QuadraticSystem(dim=2, forms=(np.diag([1.0, -1.0]), np.eye(2), -np.eye(2)))
        assert definite_forms(system) == [1, 2]


@pytest.mark.unit
class TestSolver:
    """Test suite for the restart solver."""

    def test_canonicalize(self):
        """Test that the first non-negligible entry becomes positive."""
        assert np.array_equal(canonicalize(np.array([0.0, -0.6, 0.8])), np.array([-0.0, 0.6, -0.8]))

    def test_solves_eleven_qubit_system(self, rep43, search_config):
        """Test |x| = (sqrt(11/16), sqrt(5/16))."""
        # Arrange
        system = build_system(rep43, HalfInt(11), 3)

        # Act
        solution = solve(system, search_config)

        # Assert
        assert solution.residual < 1e-12
        assert np.abs(solution.amplitudes) == pytest.approx([math.sqrt(11 / 16), math.sqrt(5 / 16)], abs=1e-6)
        assert solution.amplitudes[0] > 0
        assert 1 <= solution.restarts_used <= search_config.restarts

    def test_definite_form_exhausts(self, search_config):
        """Test that x^T x = 0 has no unit solution."""
        # Arrange
        system = QuadraticSystem(dim=2, forms=(np.eye(2),))

        # Act
        with pytest.raises(SearchExhaustedError) as info:
            solve(system, search_config)

        # Assert
        assert info.value.best_residual == pytest.approx(1.0)
        assert info.value.details["definite_forms"] == [0]
        assert info.value.details["restarts_used"] == search_config.restarts

    def test_seed_determinism(self, rep43):
        """Test that the same seed gives the same code on 1 or 4 workers."""
        system = build_system(rep43, HalfInt(27), 5)
        serial = solve(system, SearchConfig(restarts=64, rng_seed=11, max_workers=1))
        pooled = solve(system, SearchConfig(restarts=64, rng_seed=11, max_workers=4))
        again = solve(system, SearchConfig(restarts=64, rng_seed=11, max_workers=1))
        assert np.array_equal(serial.amplitudes, pooled.amplitudes)
        assert np.array_equal(serial.amplitudes, again.amplitudes)
        assert serial.restarts_used == pooled.restarts_used

    def test_restart_seeds_are_independent(self):
        """Test one distinct sub-seed per restart."""
        seeds = solver.restart_seeds(SearchConfig(restarts=8, rng_seed=3))
        starts = {tuple(np.random.default_rng(seed).standard_normal(3)) for seed in seeds}
        assert len(starts) == 8


@pytest.mark.unit
class TestCodeSearchService:
    """Test suite for the search service."""

    def test_finds_eleven_qubit_code(self, rep43, search_config):
        """Test that the d=3 search lands on n = 11."""
        # Act
        result = search_code(rep43, 3, search_config)

        # Assert
        assert result.code.n == 11
        assert result.verification.passed
        zero, _ = result.code.presented()
        assert sorted(zero) == [0, 8]
        assert abs(zero[0]) == pytest.approx(math.sqrt(5) / 4, abs=1e-6)

    def test_conjectured_range_needs_opt_in(self, rep43, settings):
        """Test the guard on d >= conjectured_min_distance."""
        with pytest.raises(InvalidInputError):
            code_search_service.search_code(rep43, settings.conjectured_min_distance)

    def test_negative_escalation_rejected(self, rep43):
        """Test escalate >= 0."""
        with pytest.raises(InvalidInputError):
            code_search_service.search_code(rep43, 3, escalate=-1)

    def test_escalates_to_larger_spin(self, rep43, search_config, mocker):
        """Test that a not-found at the first spin moves to the next one."""
        # Arrange
        real_solve = solver.solve

        def refuse_first_spin(system, cfg):
            if system.j == HalfInt(11):
                raise SearchExhaustedError("refused", best_residual=0.5, details={"definite_forms": []})
            return real_solve(system, cfg)

        mocker.patch("spincodes.features.searcher.search_service.solve", side_effect=refuse_first_spin)

        # Act
        result = code_search_service.search_code(rep43, 3, search_config, escalate=1)

        # Assert
        assert result.code.n > 11
        assert result.verification.passed

    def test_not_found_report(self, rep43, search_config, mocker):
        """Test the diagnostics carried by a failed search."""
        # Arrange
        mocker.patch(
            "spincodes.features.searcher.search_service.solve",
            side_effect=SearchExhaustedError(
                "refused", best_residual=0.25, details={"restarts_used": 32, "definite_forms": [0]}
            ),
        )

        # Act
        with pytest.raises(SearchExhaustedError) as info:
            code_search_service.search_code(rep43, 3, search_config)
        report = not_found_report(info.value)

        # Assert
        assert (report.rep.b, report.rep.a, report.d) == (4, 3, 3)
        assert (report.j, report.mu, report.nu) == ("11/2", 2, 1)
        assert report.best_residual == 0.25
        assert report.definite_forms == [0]

    @pytest.mark.slow
    def test_twenty_seven_qubit_code(self, rep43):
        """Test ((27,2,5)) of BD_8 on weights 0, 8, 16, 24."""
        # Arrange
        cfg = SearchConfig(restarts=256, rng_seed=20240601, max_workers=4)

        # Act
        result = search_code(rep43, 5, cfg)

        # Assert
        assert result.code.n == 27
        assert result.solution.residual < 1e-12
        zero, _ = result.code.presented()
        assert set(zero) == {0, 8, 16, 24}
        assert multiqubit_kl_check(result.code, 5, mode=SYMMETRIC, tol=1e-9).passed
