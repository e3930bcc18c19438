"""Self-consistent MaxEnt distributions under escort energy constraints.

``solve_maxent`` extremizes the rescaled nonadditive entropy S_{q_alpha}
subject to normalization and the q-escort energy constraint.  Stationarity,

    q_alpha/(1-q_alpha) * p_i^((q-1)/alpha) - Phi
        - q*Omega*(E_i - <E>_q)/Z_q * p_i^(q-1) = 0,
    Phi = q_alpha/(1-q_alpha) * Z_{q_alpha},

reduces per level to the trinomial 1 - x + b*x^alpha = 0 in
x = p_i^((q-1)/alpha)/Z_{q_alpha}.  Because the partition sums and the
escort mean depend on the distribution itself, the solver iterates: solve
every level's trinomial, recover p_i = (x_i * Z_{q_alpha})^(alpha/(q-1)),
renormalize, damp, repeat until the sup-norm update stalls; the reported
residual then certifies the answer against the stationarity equation.

``solve_maxent_renyi`` does the same for the additive entropy R_{q_alpha}
(same reduction with b scaled by Z_{q_alpha}); ``solve_maxent_shannon_limit``
handles the alpha -> infinity member, where the entropy degenerates to the
Shannon functional and the per-level solve becomes a Lambert-W evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .deformation import transform
from .entropy import PartitionSum, as_distribution, _partition_sum_raw
from .errors import DomainError, NonConvergenceError, NoRealRootError
from .qalgebra import Q_ONE_THRESHOLD
from .trinomial import lambert_w, solve_trinomial, trinomial_b

MAX_ITER = 10_000
DAMPING = 0.5
STEP_TOL = 1e-12
DEFAULT_OMEGA_BRACKET = (-1e3, 1e3)


def as_spectrum(levels) -> np.ndarray:
    """Validate an energy spectrum: 1-D, finite, at least two levels."""
    e = np.asarray(levels, dtype=float)
    if e.ndim != 1:
        raise DomainError(f"expected a 1-D energy spectrum, got shape {e.shape}")
    if e.size < 2:
        raise DomainError("energy spectrum needs at least two levels")
    if not np.all(np.isfinite(e)):
        raise DomainError("energy spectrum contains NaN or infinite entries")
    return e


@dataclass(frozen=True)
class MaxEntSolution:
    """Converged distribution with the diagnostics that certify it."""

    probs: np.ndarray
    z_q: PartitionSum
    z_q_alpha: PartitionSum
    phi: float
    escort_mean: float
    stationarity_residual: float
    iterations: int
    converged: bool
    omega: float


def solve_maxent(energies, q: float, alpha: float, omega: float | None = None, *,
                 target_mean: float | None = None,
                 omega_bracket: tuple[float, float] = DEFAULT_OMEGA_BRACKET,
                 max_iter: int = MAX_ITER, damping: float = DAMPING,
                 step_tol: float = STEP_TOL) -> MaxEntSolution:
    """MaxEnt distribution of S_{q_alpha} under the q-escort energy constraint.

    Exactly one of ``omega`` (fixed Lagrange multiplier) or ``target_mean``
    (outer bisection over omega until the escort mean matches) must be
    given.  ``alpha`` must be positive; q within 1e-9 of 1 routes to the
    Shannon/Gibbs closed form.

    Raises ``NoRealRootError`` (with the offending level) when some level's
    trinomial leaves its real-root region, and ``NonConvergenceError``
    (carrying the last iterate) when ``max_iter`` sweeps do not settle.
    """
    return _solve_deformed(energies, q, alpha, omega, target_mean, omega_bracket,
                           max_iter, damping, step_tol, renyi=False)


def solve_maxent_renyi(energies, q: float, alpha: float, omega: float | None = None, *,
                       target_mean: float | None = None,
                       omega_bracket: tuple[float, float] = DEFAULT_OMEGA_BRACKET,
                       max_iter: int = MAX_ITER, damping: float = DAMPING,
                       step_tol: float = STEP_TOL) -> MaxEntSolution:
    """MaxEnt distribution of the additive entropy R_{q_alpha}.

    The gradient differs from the nonadditive case only by a 1/Z_{q_alpha}
    factor, so the same trinomial reduction applies with b scaled by
    Z_{q_alpha}.  At alpha = 1 both families coincide up to an omega
    reparametrization.
    """
    return _solve_deformed(energies, q, alpha, omega, target_mean, omega_bracket,
                           max_iter, damping, step_tol, renyi=True)


def _solve_deformed(energies, q, alpha, omega, target_mean, omega_bracket,
                    max_iter, damping, step_tol, *, renyi: bool) -> MaxEntSolution:
    e = as_spectrum(energies)
    q = float(q)
    alpha = float(alpha)
    if not (math.isfinite(q) and math.isfinite(alpha)):
        raise DomainError("q and alpha must be finite")
    if alpha <= 0.0:
        raise DomainError(f"alpha must be positive, got {alpha:g}")

    def solve_at(w: float) -> MaxEntSolution:
        if abs(q - 1.0) < Q_ONE_THRESHOLD:
            return _gibbs_solution(e, w)
        return _deformed_fixed_point(e, q, alpha, w, max_iter, damping, step_tol,
                                     renyi=renyi)

    return _dispatch_mode(solve_at, e, omega, target_mean, omega_bracket)


def solve_maxent_shannon_limit(energies, q: float, omega: float | None = None, *,
                               target_mean: float | None = None,
                               omega_bracket: tuple[float, float] = DEFAULT_OMEGA_BRACKET,
                               max_iter: int = MAX_ITER, damping: float = DAMPING,
                               step_tol: float = STEP_TOL) -> MaxEntSolution:
    """The alpha -> infinity member: Shannon entropy, q-escort constraint.

    Stationarity ln p_i + S_1 + q*Omega*DeltaE_i/Z_q * p_i^(q-1) = 0 is
    solved per level through the principal Lambert W branch,

        p_i = exp[-S_1 - W(u_i)/(q-1)],
        u_i = (q-1) * q * exp(-(q-1) S_1) * Omega * DeltaE_i / Z_q,

    iterated to self-consistency in S_1, Z_q and the escort mean.  A level
    whose W argument falls below -1/e raises ``NoRealRootError`` naming it.
    """
    e = as_spectrum(energies)
    q = float(q)
    if not math.isfinite(q):
        raise DomainError("q must be finite")

    def solve_at(w: float) -> MaxEntSolution:
        if abs(q - 1.0) < Q_ONE_THRESHOLD:
            return _gibbs_solution(e, w)
        return _shannon_limit_fixed_point(e, q, w, max_iter, damping, step_tol)

    return _dispatch_mode(solve_at, e, omega, target_mean, omega_bracket)


def _dispatch_mode(solve_at, e, omega, target_mean, omega_bracket) -> MaxEntSolution:
    if (omega is None) == (target_mean is None):
        raise DomainError("exactly one of omega and target_mean must be given")
    if omega is not None:
        w = float(omega)
        if not math.isfinite(w):
            raise DomainError("omega must be finite")
        return solve_at(w)
    return _solve_for_target(solve_at, e, float(target_mean), omega_bracket)


def _uniform(n: int) -> np.ndarray:
    return np.full(n, 1.0 / n)


def _partition(p: np.ndarray, q: float) -> float:
    return float(np.sum(p**q))


def _escort_mean_raw(p: np.ndarray, e: np.ndarray, q: float) -> tuple[float, float]:
    z = _partition(p, q)
    return float(np.dot(p**q, e)) / z, z


def _deformed_fixed_point(e, q, alpha, omega, max_iter, damping, step_tol, *,
                          renyi: bool) -> MaxEntSolution:
    if max_iter < 1:
        raise DomainError("max_iter must be >= 1")
    n = e.size
    q_alpha = transform(q, alpha)
    recovery_exp = alpha / (q - 1.0)
    p = _uniform(n)
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        mean, z_q = _escort_mean_raw(p, e, q)
        z_qa = _partition(p, q_alpha)
        scale = z_qa if renyi else 1.0
        x = np.empty(n)
        for i in range(n):
            b_i = trinomial_b(q, alpha, omega, e[i] - mean, z_q, z_qa) * scale
            try:
                x[i] = solve_trinomial(alpha, b_i)
            except NoRealRootError as err:
                raise NoRealRootError(
                    f"level {i} (E = {e[i]:g}): {err}",
                    alpha=alpha, b=b_i, level=i,
                ) from err
        raw = (x * z_qa) ** recovery_exp
        p_new = raw / raw.sum()
        p_next = (1.0 - damping) * p + damping * p_new
        delta = float(np.max(np.abs(p_next - p)))
        p = p_next
        if delta < step_tol:
            converged = True
            break
    solution = _deformed_solution(p, e, q, alpha, omega, iterations, converged,
                                  renyi=renyi)
    if not converged:
        raise NonConvergenceError(
            f"no convergence after {max_iter} sweeps (last update {delta:.3g})",
            solution=solution,
        )
    return solution


def _deformed_solution(p, e, q, alpha, omega, iterations, converged, *,
                       renyi: bool) -> MaxEntSolution:
    q_alpha = transform(q, alpha)
    mean, z_q = _escort_mean_raw(p, e, q)
    z_qa = _partition(p, q_alpha)
    prefactor = q_alpha / (1.0 - q_alpha)
    if renyi:
        lead = prefactor / z_qa * p ** (q_alpha - 1.0)
        phi = prefactor
    else:
        lead = prefactor * p ** (q_alpha - 1.0)
        phi = prefactor * z_qa
    grad_constraint = q * omega * (e - mean) / z_q * p ** (q - 1.0)
    res = float(np.max(np.abs(lead - phi - grad_constraint)))
    return MaxEntSolution(
        probs=p,
        z_q=PartitionSum(z_q, q),
        z_q_alpha=PartitionSum(z_qa, q_alpha),
        phi=phi,
        escort_mean=mean,
        stationarity_residual=res,
        iterations=iterations,
        converged=converged,
        omega=omega,
    )


def _shannon_limit_fixed_point(e, q, omega, max_iter, damping,
                               step_tol) -> MaxEntSolution:
    if max_iter < 1:
        raise DomainError("max_iter must be >= 1")
    n = e.size
    p = _uniform(n)
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        s1 = float(-np.sum(p * np.log(p)))
        mean, z_q = _escort_mean_raw(p, e, q)
        u = (q - 1.0) * q * math.exp(-(q - 1.0) * s1) * omega * (e - mean) / z_q
        w = np.empty(n)
        for i in range(n):
            try:
                w[i] = lambert_w(u[i])
            except DomainError as err:
                raise NoRealRootError(
                    f"level {i} (E = {e[i]:g}): Lambert W argument "
                    f"{u[i]:g} below -1/e",
                    b=float(u[i]), level=i,
                ) from err
        raw = np.exp(-s1 - w / (q - 1.0))
        p_new = raw / raw.sum()
        p_next = (1.0 - damping) * p + damping * p_new
        delta = float(np.max(np.abs(p_next - p)))
        p = p_next
        if delta < step_tol:
            converged = True
            break
    solution = _shannon_limit_solution(p, e, q, omega, iterations, converged)
    if not converged:
        raise NonConvergenceError(
            f"no convergence after {max_iter} sweeps (last update {delta:.3g})",
            solution=solution,
        )
    return solution


def _shannon_limit_solution(p, e, q, omega, iterations, converged) -> MaxEntSolution:
    s1 = float(-np.sum(p * np.log(p)))
    mean, z_q = _escort_mean_raw(p, e, q)
    res = float(np.max(np.abs(
        np.log(p) + s1 + q * omega * (e - mean) / z_q * p ** (q - 1.0)
    )))
    return MaxEntSolution(
        probs=p,
        z_q=PartitionSum(z_q, q),
        z_q_alpha=PartitionSum(1.0, 1.0),
        phi=s1 - 1.0,
        escort_mean=mean,
        stationarity_residual=res,
        iterations=iterations,
        converged=converged,
        omega=omega,
    )


def _gibbs_solution(e: np.ndarray, omega: float) -> MaxEntSolution:
    """Closed-form Boltzmann-Gibbs solution for the q -> 1 branch."""
    logits = -omega * e
    logits -= logits.max()
    weights = np.exp(logits)
    p = weights / weights.sum()
    s1 = float(-np.sum(p * np.log(p)))
    mean = float(np.dot(p, e))
    res = float(np.max(np.abs(np.log(p) + s1 + omega * (e - mean))))
    return MaxEntSolution(
        probs=p,
        z_q=PartitionSum(1.0, 1.0),
        z_q_alpha=PartitionSum(1.0, 1.0),
        phi=s1 - 1.0,
        escort_mean=mean,
        stationarity_residual=res,
        iterations=0,
        converged=True,
        omega=omega,
    )


def _solve_for_target(solve_at, e, target, bracket) -> MaxEntSolution:
    """Outer bisection over omega until the escort mean hits the target."""
    if not math.isfinite(target):
        raise DomainError("target mean must be finite")
    if target < e.min() or target > e.max():
        raise DomainError(
            f"target mean {target:g} outside the spectrum range "
            f"[{e.min():g}, {e.max():g}]"
        )
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (lo < hi):
        raise DomainError(f"invalid omega bracket {bracket!r}")

    def attempt(w: float) -> MaxEntSolution | None:
        try:
            return solve_at(w)
        except (NoRealRootError, NonConvergenceError):
            return None

    # Omega = 0 always solves (uniform), so infeasible endpoints are pulled
    # geometrically toward 0 until the solver succeeds there.
    sol_lo = attempt(lo)
    for _ in range(200):
        if sol_lo is not None or lo == 0.0:
            break
        lo *= 0.5
        sol_lo = attempt(lo)
    sol_hi = attempt(hi)
    for _ in range(200):
        if sol_hi is not None or hi == 0.0:
            break
        hi *= 0.5
        sol_hi = attempt(hi)
    if sol_lo is None or sol_hi is None:
        raise NonConvergenceError(
            "no feasible omega endpoint found while shrinking the bracket toward 0"
        )
    g_lo = sol_lo.escort_mean - target
    g_hi = sol_hi.escort_mean - target
    if g_lo == 0.0:
        return sol_lo
    if g_hi == 0.0:
        return sol_hi
    if g_lo * g_hi > 0.0:
        raise DomainError(
            f"target mean {target:g} not bracketed: escort mean spans "
            f"[{min(sol_lo.escort_mean, sol_hi.escort_mean):g}, "
            f"{max(sol_lo.escort_mean, sol_hi.escort_mean):g}] "
            f"over omega in [{lo:g}, {hi:g}]"
        )
    best = sol_lo if abs(g_lo) < abs(g_hi) else sol_hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        sol_mid = solve_at(mid)
        g_mid = sol_mid.escort_mean - target
        if abs(g_mid) < abs(best.escort_mean - target):
            best = sol_mid
        if g_mid == 0.0:
            break
        if g_lo * g_mid < 0.0:
            hi = mid
        else:
            lo, g_lo = mid, g_mid
        if abs(hi - lo) <= 1e-13 * max(1.0, abs(lo), abs(hi)):
            break
    return best


def partition_bound_check(probs, q: float) -> tuple[float, float]:
    """Evaluate both sides of the Cauchy-Schwarz bound Z_{(q+1)/2} <= sqrt(Z_q).

    Returns (Z_{(q+1)/2}, sqrt(Z_q)); equality holds exactly for the
    uniform distribution.
    """
    p = as_distribution(probs)
    q = float(q)
    if q < 0.0:
        raise DomainError(f"bound check requires q >= 0, got {q:g}")
    lhs = _partition_sum_raw(p, 0.5 * (q + 1.0))
    rhs = math.sqrt(_partition_sum_raw(p, q))
    return lhs, rhs
