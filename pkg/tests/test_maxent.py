import math

import numpy as np
import pytest

from qtherm.checks import _affinity_residual, simplex_constrained_maximizer
from qtherm.deformation import transform
from qtherm.entropy import escort_mean
from qtherm.errors import DomainError, NonConvergenceError, NoRealRootError
from qtherm.maxent import (
    as_spectrum,
    partition_bound_check,
    solve_maxent,
    solve_maxent_renyi,
    solve_maxent_shannon_limit,
)

E3 = np.array([0.0, 1.0, 2.0])
E5 = np.array([0.0, 0.5, 1.1, 1.7, 2.3])


def independent_gibbs(e, omega):
    """Oracle: direct Boltzmann factor, no shared solver code."""
    weights = [math.exp(-omega * x) for x in e]
    total = sum(weights)
    return np.array([w / total for w in weights])


class TestSpectrumValidation:
    def test_rejects_single_level(self):
        with pytest.raises(DomainError):
            as_spectrum([1.0])

    def test_rejects_nan(self):
        with pytest.raises(DomainError):
            as_spectrum([0.0, math.nan])

    def test_allows_degenerate(self):
        assert as_spectrum([2.0, 2.0]).tolist() == [2.0, 2.0]


class TestSolveMaxent:
    def test_free_problem_is_uniform(self):
        for q, alpha in ((0.8, 0.5), (1.2, 2.0), (2.0, 1.0)):
            sol = solve_maxent(E3, q, alpha, 0.0)
            assert sol.converged
            assert sol.probs == pytest.approx([1 / 3] * 3, abs=1e-13)
            assert sol.stationarity_residual <= 1e-12

    def test_degenerate_spectrum_is_uniform(self):
        sol = solve_maxent(np.array([1.5, 1.5, 1.5]), 1.2, 2.0, 5.0)
        assert sol.probs == pytest.approx([1 / 3] * 3, abs=1e-13)

    @pytest.mark.parametrize("q", [0.8, 1.2])
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_stationarity_on_grid(self, q, alpha):
        for e, omega in ((E3, 0.3), (E5, 0.25)):
            sol = solve_maxent(e, q, alpha, omega)
            assert sol.converged
            assert sol.stationarity_residual <= 1e-8
            assert sol.probs.sum() == pytest.approx(1.0, abs=1e-12)
            assert np.all(sol.probs > 0.0)

    @pytest.mark.parametrize("q", [0.8, 1.2])
    def test_alpha_one_is_q_exponential(self, q):
        # membership in the q-exponential family: p^(1-q) affine in E
        sol = solve_maxent(E3, q, 1.0, 0.5)
        assert _affinity_residual(sol.probs, E3, q) <= 1e-8

    def test_diagnostics_are_consistent(self):
        q, alpha, omega = 1.2, 2.0, 0.3
        sol = solve_maxent(E3, q, alpha, omega)
        q_a = transform(q, alpha)
        assert sol.z_q.q_used == q
        assert sol.z_q_alpha.q_used == q_a
        assert sol.z_q.z == pytest.approx(float(np.sum(sol.probs**q)), rel=1e-14)
        assert sol.phi == pytest.approx(q_a / (1.0 - q_a) * sol.z_q_alpha.z, rel=1e-14)
        assert sol.escort_mean == pytest.approx(
            escort_mean(sol.probs, E3, q), rel=1e-12)
        assert sol.omega == omega

    @pytest.mark.parametrize("q,alpha", [(1.2, 2.0), (0.8, 2.0), (1.2, 0.5)])
    def test_against_simplex_oracle(self, q, alpha):
        sol = solve_maxent(E3, q, alpha, 0.3)
        p_oracle = simplex_constrained_maximizer(E3, q, alpha, sol.escort_mean)
        assert np.max(np.abs(sol.probs - p_oracle)) <= 1e-4

    def test_classical_branch_is_gibbs(self):
        sol = solve_maxent(E3, 1.0, 2.0, 0.7)
        assert sol.probs == pytest.approx(independent_gibbs(E3, 0.7), abs=1e-14)
        assert sol.stationarity_residual <= 1e-12

    def test_no_real_root_names_level(self):
        with pytest.raises(NoRealRootError) as excinfo:
            solve_maxent(E3, 1.2, 2.0, 50.0)
        assert excinfo.value.level is not None
        assert excinfo.value.b is not None

    def test_non_convergence_carries_last_iterate(self):
        with pytest.raises(NonConvergenceError) as excinfo:
            solve_maxent(E3, 1.2, 2.0, 0.3, max_iter=2)
        sol = excinfo.value.solution
        assert sol is not None
        assert not sol.converged
        assert sol.iterations == 2

    def test_rejects_nonpositive_alpha(self):
        with pytest.raises(DomainError):
            solve_maxent(E3, 1.2, -1.0, 0.3)

    def test_needs_exactly_one_mode(self):
        with pytest.raises(DomainError):
            solve_maxent(E3, 1.2, 2.0)
        with pytest.raises(DomainError):
            solve_maxent(E3, 1.2, 2.0, 0.3, target_mean=0.5)


class TestTargetMeanMode:
    def test_hits_target(self):
        sol = solve_maxent(E3, 1.2, 2.0, target_mean=0.6)
        assert sol.converged
        assert sol.escort_mean == pytest.approx(0.6, abs=1e-9)
        assert sol.stationarity_residual <= 1e-8
        # the resolved omega reproduces the same distribution
        again = solve_maxent(E3, 1.2, 2.0, sol.omega)
        assert np.max(np.abs(again.probs - sol.probs)) <= 1e-9

    def test_default_bracket_survives_infeasible_endpoints(self):
        # +/-1e3 is far outside the real-root region at alpha = 2; the
        # endpoints shrink toward 0 until feasible
        sol = solve_maxent(E3, 1.2, 2.0, target_mean=0.9)
        assert sol.escort_mean == pytest.approx(0.9, abs=1e-9)

    def test_shannon_limit_target(self):
        sol = solve_maxent_shannon_limit(E3, 1.2, target_mean=0.8)
        assert sol.escort_mean == pytest.approx(0.8, abs=1e-9)

    def test_rejects_target_outside_spectrum(self):
        with pytest.raises(DomainError):
            solve_maxent(E3, 1.2, 2.0, target_mean=2.5)


class TestShannonLimit:
    def test_free_problem_is_uniform(self):
        sol = solve_maxent_shannon_limit(E3, 1.3, 0.0)
        assert sol.probs == pytest.approx([1 / 3] * 3, abs=1e-13)
        assert sol.stationarity_residual <= 1e-12

    def test_matches_gibbs_near_classical_point(self):
        sol = solve_maxent_shannon_limit(E3, 1.0 + 1e-7, 0.4)
        assert np.max(np.abs(sol.probs - independent_gibbs(E3, 0.4))) <= 1e-6

    def test_inside_threshold_is_exact_gibbs(self):
        sol = solve_maxent_shannon_limit(E3, 1.0 + 1e-10, 0.4)
        assert np.max(np.abs(sol.probs - independent_gibbs(E3, 0.4))) <= 1e-14

    def test_two_level_back_substitution(self):
        sol = solve_maxent_shannon_limit(np.array([0.0, 1.0]), 1.3, 0.4)
        assert sol.converged
        assert sol.stationarity_residual <= 1e-8
        # independent residual recomputation of ln p + S1 + q*w*dE/Z_q*p^(q-1)
        p = sol.probs
        s1 = -float(np.sum(p * np.log(p)))
        z_q = float(np.sum(p**1.3))
        mean = float(np.dot(p**1.3, [0.0, 1.0])) / z_q
        res = np.log(p) + s1 + 1.3 * 0.4 * (np.array([0.0, 1.0]) - mean) / z_q \
            * p**0.3
        assert np.max(np.abs(res)) <= 1e-8

    def test_lambert_domain_violation_names_level(self):
        with pytest.raises(NoRealRootError) as excinfo:
            solve_maxent_shannon_limit(np.array([0.0, 1.0]), 1.3, -10.0)
        assert excinfo.value.level is not None

    def test_five_levels(self):
        sol = solve_maxent_shannon_limit(E5, 0.8, 0.3)
        assert sol.converged
        assert sol.stationarity_residual <= 1e-8


class TestRenyiVariant:
    def test_free_problem_is_uniform(self):
        sol = solve_maxent_renyi(E3, 1.2, 2.0, 0.0)
        assert sol.probs == pytest.approx([1 / 3] * 3, abs=1e-13)

    @pytest.mark.parametrize("q", [0.8, 1.2])
    def test_alpha_one_is_q_exponential(self, q):
        sol = solve_maxent_renyi(E3, q, 1.0, 0.5)
        assert sol.converged
        assert _affinity_residual(sol.probs, E3, q) <= 1e-8

    def test_stationarity_residual(self):
        for q, alpha in ((0.8, 0.5), (1.2, 2.0)):
            sol = solve_maxent_renyi(E3, q, alpha, 0.3)
            assert sol.converged
            assert sol.stationarity_residual <= 1e-8

    def test_agrees_with_nonadditive_solver_as_omega_vanishes(self):
        gaps = []
        for omega in (0.1, 0.05, 0.025):
            s_t = solve_maxent(E3, 1.2, 2.0, omega)
            s_r = solve_maxent_renyi(E3, 1.2, 2.0, omega)
            gaps.append(float(np.max(np.abs(s_t.probs - s_r.probs))))
        assert gaps[0] > gaps[1] > gaps[2]
        for wide, narrow in zip(gaps, gaps[1:]):
            assert wide / narrow == pytest.approx(2.0, abs=0.4)

    def test_coincides_with_nonadditive_solver_at_equal_target_mean(self):
        # R_{q_a} is a monotone transform of S_{q_a}, so under the same
        # escort-mean value both functionals pick the same distribution;
        # only the omega parametrizations differ.
        s_t = solve_maxent(E3, 1.2, 2.0, target_mean=0.7)
        s_r = solve_maxent_renyi(E3, 1.2, 2.0, target_mean=0.7)
        assert np.max(np.abs(s_t.probs - s_r.probs)) <= 1e-9
        assert s_t.omega != pytest.approx(s_r.omega, rel=1e-3)

    def test_against_simplex_oracle(self):
        # maximizing S_{q_a} at the renyi solution's escort mean must
        # reproduce it, by the same monotone-transform argument
        sol = solve_maxent_renyi(E3, 1.2, 2.0, 0.3)
        p_oracle = simplex_constrained_maximizer(E3, 1.2, 2.0, sol.escort_mean)
        assert np.max(np.abs(sol.probs - p_oracle)) <= 1e-4


class TestPartitionBound:
    def test_uniform_is_equality(self):
        lhs, rhs = partition_bound_check([0.2] * 5, 2.0)
        # closed form: both sides are n^(-1/2)
        assert lhs == pytest.approx(5.0 ** -0.5, rel=1e-14)
        assert rhs == pytest.approx(5.0 ** -0.5, rel=1e-14)
        assert abs(lhs - rhs) <= 1e-14

    def test_delta_is_equality(self):
        # q > 0 so the zero entry falls under the 0^q := 0 convention
        for q in (0.5, 1.0, 3.0):
            lhs, rhs = partition_bound_check([1.0, 0.0], q)
            assert lhs == 1.0
            assert rhs == 1.0

    def test_two_state_strict_inequality(self):
        lhs, rhs = partition_bound_check([0.9, 0.1], 2.0)
        assert lhs == pytest.approx(0.9**1.5 + 0.1**1.5, rel=1e-14)
        assert rhs == pytest.approx(math.sqrt(0.82), rel=1e-14)
        assert lhs < rhs

    def test_random_distributions(self):
        rng = np.random.default_rng(41)
        for _ in range(1000):
            p = rng.dirichlet(np.ones(int(rng.integers(2, 7))))
            q = rng.uniform(0.0, 3.0)
            lhs, rhs = partition_bound_check(p, q)
            assert lhs <= rhs + 1e-14

    def test_rejects_negative_q(self):
        with pytest.raises(DomainError):
            partition_bound_check([0.5, 0.5], -0.5)
