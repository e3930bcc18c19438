"""Deterministic, seeded property suites behind ``qtherm check``.

Each suite replays the library's mathematical invariants on freshly drawn
random inputs and reports one result per property.  Tolerances live in
module-level constants so a harness can tighten or corrupt them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import deformation as dfm
from . import entropy as ent
from . import qalgebra as qa
from .errors import DomainError, DualityRangeWarning
from .maxent import (
    partition_bound_check,
    solve_maxent,
    solve_maxent_renyi,
    solve_maxent_shannon_limit,
)
from .trinomial import (
    lambert_w,
    residual as trinomial_residual,
    series_coefficient,
    series_radius,
    solve_trinomial,
    trinomial_series,
)

GROUP_TOL = 1e-12
INVOLUTION_TOL = 1e-15
ALGEBRA_TOL = 1e-12
CLASSICAL_LIMIT_TOL = 1e-6
ENTROPY_TOL = 1e-12
HYBRID_ADDITIVITY_TOL = 1e-10
QUASI_ALPHA_TOL = 1e-10
BACKSUB_TOL = 1e-12
SERIES_MATCH_TOL = 1e-10
LAMBERT_TOL = 1e-14
STATIONARITY_TOL = 1e-8
AFFINITY_TOL = 1e-8
ORACLE_TOL = 1e-4
GIBBS_LIMIT_TOL = 1e-6
BOUND_SLACK = 1e-14


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def _rel_gap(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _worst(suite: str, name: str, gap: float, tol: float,
           count: int) -> CheckResult:
    return CheckResult(suite, name, gap <= tol,
                       f"{count} samples, worst gap {gap:.3g} (tol {tol:.3g})")


# --- group suite -------------------------------------------------------------

def run_group_suite(seed: int, samples: int = 10_000) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []

    def draw_scale() -> float:
        while True:
            a = rng.uniform(-4.0, 4.0)
            if abs(a) > 1e-9:
                return a

    worst_comp = worst_assoc = worst_inv = 0.0
    neutral_ok = invariant_ok = sign_ok = True
    worst_add_dual = worst_mul_dual = 0.0
    for _ in range(samples):
        q = rng.uniform(-2.0, 4.0)
        a, b, c = draw_scale(), draw_scale(), draw_scale()
        via_steps = dfm.transform(dfm.transform(q, a), b)
        via_compose = dfm.transform(q, dfm.compose(a, b))
        swapped = dfm.transform(dfm.transform(q, b), a)
        worst_comp = max(worst_comp, _rel_gap(via_steps, via_compose),
                         _rel_gap(via_steps, swapped))
        left = dfm.transform(q, dfm.compose(dfm.compose(a, b), c))
        right = dfm.transform(q, dfm.compose(a, dfm.compose(b, c)))
        worst_assoc = max(worst_assoc, _rel_gap(left, right))
        neutral_ok &= dfm.transform(q, 1.0) == q
        invariant_ok &= dfm.transform(1.0, a) == 1.0
        worst_inv = max(worst_inv, _rel_gap(dfm.transform(dfm.transform(q, a), 1.0 / a), q))
        if a > 0.0:
            sign_ok &= math.copysign(1.0, dfm.transform(q, a) - 1.0) == \
                math.copysign(1.0, q - 1.0) or q == 1.0
        with warnings.catch_warnings():
            # the draw intentionally spans indices outside [0, 2]
            warnings.simplefilter("ignore", DualityRangeWarning)
            worst_add_dual = max(
                worst_add_dual,
                _rel_gap(dfm.additive_dual(dfm.additive_dual(q)), q))
            if abs(q) > 1e-9:
                worst_mul_dual = max(
                    worst_mul_dual,
                    _rel_gap(dfm.multiplicative_dual(dfm.multiplicative_dual(q)), q),
                )
    results.append(_worst("group", "composition", worst_comp, GROUP_TOL, samples))
    results.append(_worst("group", "associativity", worst_assoc, GROUP_TOL, samples))
    results.append(CheckResult("group", "neutral element", neutral_ok,
                               f"{samples} samples, transform(q, 1) == q"))
    results.append(CheckResult("group", "unit invariant", invariant_ok,
                               f"{samples} samples, transform(1, a) == 1"))
    results.append(_worst("group", "inverse element", worst_inv, GROUP_TOL, samples))
    results.append(CheckResult("group", "sign preservation", sign_ok,
                               f"{samples} samples, sign(q_a - 1) == sign(q - 1)"))
    results.append(_worst("group", "additive dual involution",
                          worst_add_dual, INVOLUTION_TOL, samples))
    results.append(_worst("group", "multiplicative dual involution",
                          worst_mul_dual, INVOLUTION_TOL, samples))

    worst_bath = 0.0
    bath_gt_one = True
    n_bath = max(samples // 10, 100)
    for _ in range(n_bath):
        n = int(rng.integers(2, 1000))
        a = rng.uniform(0.01, 4.0)
        q_direct = dfm.heat_bath_q(dfm.rescale_bath(n, a))
        q_mapped = dfm.transform(dfm.heat_bath_q(n), a)
        worst_bath = max(worst_bath, _rel_gap(q_direct, q_mapped))
        bath_gt_one &= q_direct > 1.0
    results.append(_worst("group", "heat bath consistency", worst_bath,
                          GROUP_TOL, n_bath))
    results.append(CheckResult("group", "rescaled bath stays above q = 1",
                               bath_gt_one, f"{n_bath} samples"))
    return results


# --- algebra suite -----------------------------------------------------------

def run_algebra_suite(seed: int, samples: int = 10_000) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []

    def draw_q() -> float:
        # Stay away from q = 1, where the 1/(1-q) exponents amplify rounding
        # without bound; the classical limit is checked separately below.
        while True:
            q = rng.uniform(0.1, 1.9)
            if abs(q - 1.0) >= 0.05:
                return q

    def draw_scale() -> float:
        a = rng.uniform(0.25, 3.0)
        return a if rng.random() < 0.5 else -a

    worst = dict.fromkeys(
        ["add/sub inverse", "mul/div inverse", "exp product", "exp of sum",
         "log of product", "log sum", "dist add", "dist sub", "dist mul",
         "dist div", "exp scaling", "log scaling", "assoc add", "assoc mul"],
        0.0,
    )
    commutative_ok = True
    count = 0
    while count < samples:
        q = draw_q()
        a = draw_scale()
        x = rng.uniform(-0.5, 1.0)
        y = rng.uniform(-0.5, 1.0)
        u = rng.uniform(0.5, 2.5)
        v = rng.uniform(0.5, 2.5)
        w = rng.uniform(0.5, 2.5)
        e = 1.0 - q
        if abs(1.0 + e * y) < 0.05 or 1.0 + e * x < 0.05 or 1.0 + e * y < 0.05:
            continue
        if 1.0 + e * (x + y) < 0.05:
            continue
        if u**e + v**e - 1.0 < 0.05 or v**e + w**e - 1.0 < 0.05:
            continue
        if (u**e + v**e - 1.0) + w**e - 1.0 < 0.05:
            continue
        if u**e - v**e + 1.0 < 0.05:
            continue
        count += 1

        worst["add/sub inverse"] = max(
            worst["add/sub inverse"],
            _rel_gap(qa.q_sub(qa.q_add(x, y, q), y, q), x))
        worst["mul/div inverse"] = max(
            worst["mul/div inverse"],
            _rel_gap(qa.q_div(qa.q_mul(u, v, q), v, q), u))

        worst["exp product"] = max(
            worst["exp product"],
            _rel_gap(qa.q_exp(x, q) * qa.q_exp(y, q),
                     qa.q_exp(qa.q_add(x, y, q), q)))
        worst["exp of sum"] = max(
            worst["exp of sum"],
            _rel_gap(qa.q_exp(x + y, q),
                     qa.q_mul(qa.q_exp(x, q), qa.q_exp(y, q), q)))
        worst["log of product"] = max(
            worst["log of product"],
            _rel_gap(qa.q_log(u * v, q),
                     qa.q_add(qa.q_log(u, q), qa.q_log(v, q), q)))
        worst["log sum"] = max(
            worst["log sum"],
            _rel_gap(qa.q_log(u, q) + qa.q_log(v, q),
                     qa.q_log(qa.q_mul(u, v, q), q)))

        for name, pair in (
            ("dist add", qa.dist_add(x, y, q, a)),
            ("dist sub", qa.dist_sub(x, y, q, a)),
            ("dist mul", qa.dist_mul(u, v, q, a)),
            ("dist div", qa.dist_div(u, v, q, a)),
            ("exp scaling", qa.exp_scaling(x, q, a)),
            ("log scaling", qa.log_scaling(u, q, a)),
        ):
            worst[name] = max(worst[name], _rel_gap(*pair))

        commutative_ok &= qa.q_add(x, y, q) == qa.q_add(y, x, q)
        commutative_ok &= qa.q_mul(u, v, q) == qa.q_mul(v, u, q)
        worst["assoc add"] = max(
            worst["assoc add"],
            _rel_gap(qa.q_add(qa.q_add(x, y, q), u, q),
                     qa.q_add(x, qa.q_add(y, u, q), q)))
        worst["assoc mul"] = max(
            worst["assoc mul"],
            _rel_gap(qa.q_mul(qa.q_mul(u, v, q), w, q),
                     qa.q_mul(u, qa.q_mul(v, w, q), q)))

    for name, gap in worst.items():
        results.append(_worst("algebra", name, gap, ALGEBRA_TOL, samples))
    results.append(CheckResult("algebra", "commutativity", commutative_ok,
                               f"{samples} samples, exact"))

    worst_limit = 0.0
    n_limit = max(samples // 10, 100)
    for _ in range(n_limit):
        q = 1.0 + rng.choice([-1e-8, 1e-8])
        x = rng.uniform(0.5, 2.5)
        y = rng.uniform(0.5, 2.5)
        worst_limit = max(
            worst_limit,
            abs(qa.q_add(x, y, q) - (x + y)),
            abs(qa.q_sub(x, y, q) - (x - y)),
            abs(qa.q_mul(x, y, q) - x * y),
            abs(qa.q_div(x, y, q) - x / y),
            abs(qa.q_exp(x, q) - math.exp(x)),
            abs(qa.q_log(x, q) - math.log(x)),
        )
    results.append(_worst("algebra", "classical limit q -> 1", worst_limit,
                          CLASSICAL_LIMIT_TOL, n_limit))

    # Plain distributivity must fail: 2*(1 (+)_0.5 1) != 2 (+)_0.5 2.
    lhs = 2.0 * qa.q_add(1.0, 1.0, 0.5)
    rhs = qa.q_add(2.0, 2.0, 0.5)
    results.append(CheckResult(
        "algebra", "plain distributivity fails (witness)",
        abs(lhs - rhs) > 0.1,
        f"x(y (+)_q z) = {lhs:g} vs xy (+)_q xz = {rhs:g} at q = 0.5",
    ))
    return results


# --- entropy suite -----------------------------------------------------------

def _random_distribution(rng, n_max: int = 6) -> np.ndarray:
    n = int(rng.integers(2, n_max + 1))
    return rng.dirichlet(np.ones(n))


def run_entropy_suite(seed: int, samples: int = 1_000) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []

    worst_pseudo = worst_renyi = worst_bridge = 0.0
    for _ in range(samples):
        pa = _random_distribution(rng)
        pb = _random_distribution(rng)
        q = rng.uniform(-1.0, 3.0)
        joint = ent.product_distribution(pa, pb)
        worst_pseudo = max(worst_pseudo, _rel_gap(
            ent.tsallis(joint, q),
            qa.q_add(ent.tsallis(pa, q), ent.tsallis(pb, q), q)))
        worst_renyi = max(worst_renyi, _rel_gap(
            ent.renyi(joint, q), ent.renyi(pa, q) + ent.renyi(pb, q)))
        q_mid = rng.uniform(0.2, 1.8)
        if abs(q_mid - 1.0) > 0.05:
            worst_bridge = max(worst_bridge, _rel_gap(
                ent.renyi(pa, q_mid),
                math.log(qa.q_exp(ent.tsallis(pa, q_mid), q_mid))))
    results.append(_worst("entropy", "nonadditive pseudo-additivity",
                          worst_pseudo, ENTROPY_TOL, samples))
    results.append(_worst("entropy", "renyi additivity", worst_renyi,
                          ENTROPY_TOL, samples))
    results.append(_worst("entropy", "renyi = log q-exp of tsallis",
                          worst_bridge, ENTROPY_TOL, samples))

    in_range = True
    n_alpha = max(10 * samples, 1000)
    for _ in range(n_alpha):
        alpha = ent.quasi_additivity_alpha(_random_distribution(rng))
        in_range &= 1.0 - 1e-12 <= alpha <= 2.0 + 1e-12
    results.append(CheckResult("entropy", "quasi-additivity alpha in [1, 2]",
                               in_range, f"{n_alpha} samples"))
    worst_uniform = max(
        abs(ent.quasi_additivity_alpha(np.full(n, 1.0 / n)) - 2.0)
        for n in range(2, 9)
    )
    delta_alpha = ent.quasi_additivity_alpha([1.0, 0.0, 0.0])
    results.append(CheckResult(
        "entropy", "alpha = 2 on uniform, 1 on delta",
        worst_uniform <= QUASI_ALPHA_TOL and delta_alpha == 1.0,
        f"uniform gap {worst_uniform:.3g}, delta alpha {delta_alpha:g}",
    ))

    p_fixed = np.array([0.5, 0.3, 0.2])
    gaps = [ent.quasi_additivity_check(p_fixed, 1.0 + dq)[2]
            for dq in (0.1, 0.05, 0.025)]
    orders = [math.log2(gaps[0] / gaps[1]), math.log2(gaps[1] / gaps[2])]
    order_ok = all(1.8 <= o <= 2.2 for o in orders)
    results.append(CheckResult(
        "entropy", "quasi-additivity gap is second order in q - 1",
        order_ok, f"measured orders {orders[0]:.3f}, {orders[1]:.3f}",
    ))

    worst_hybrid = worst_hybrid_shannon = worst_avg = 0.0
    for _ in range(samples):
        pa = _random_distribution(rng)
        pb = _random_distribution(rng)
        q = rng.uniform(0.5, 2.5)
        joint = ent.product_distribution(pa, pb)
        worst_hybrid = max(worst_hybrid, _rel_gap(
            ent.hybrid(joint, q),
            qa.q_add(ent.hybrid(pa, q), ent.hybrid(pb, q), q)))
        worst_hybrid_shannon = max(worst_hybrid_shannon,
                                   abs(ent.hybrid(pa, 1.0) - ent.shannon(pa)))
        q_pos = rng.uniform(0.0, 3.0)
        worst_avg = max(worst_avg, _rel_gap(
            ent.avg_hybrid(pa, q_pos), ent.hybrid(pa, 0.5 * (q_pos + 1.0))))
    results.append(_worst("entropy", "hybrid pseudo-additivity", worst_hybrid,
                          HYBRID_ADDITIVITY_TOL, samples))
    results.append(_worst("entropy", "hybrid at q = 1 is Shannon",
                          worst_hybrid_shannon, ENTROPY_TOL, samples))
    results.append(_worst("entropy", "average hybrid index rescaling",
                          worst_avg, ENTROPY_TOL, samples))
    try:
        ent.hybrid(p_fixed, 0.4)
        rejects = False
    except DomainError:
        rejects = True
    results.append(CheckResult("entropy", "hybrid rejects q < 1/2", rejects,
                               "hybrid(P, 0.4) raises DomainError"))

    grid = np.linspace(0.5, 2.0, 16)
    values = [ent.tsallis(p_fixed, q) for q in grid]
    monotone = all(values[i + 1] <= values[i] + 1e-12 for i in range(len(values) - 1))
    results.append(CheckResult("entropy", "nonadditive entropy non-increasing in q",
                               monotone, f"grid of {len(grid)} points on [0.5, 2]"))
    return results


# --- maxent suite ------------------------------------------------------------

_B_GRIDS = {
    0.5: np.linspace(-2.0, 2.0, 41),
    1.0: np.linspace(-2.0, 0.9, 41),
    1.5: np.linspace(-2.0, 0.38, 41),
    2.0: np.linspace(-2.0, 0.2499, 41),
    3.0: np.linspace(-2.0, 0.147, 41),
}


def run_maxent_suite(seed: int, samples: int = 10_000) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []

    worst_res = 0.0
    continuity_ok = True
    n_grid = 0
    for alpha, grid in _B_GRIDS.items():
        prev_x = None
        for b in grid:
            x = solve_trinomial(alpha, float(b))
            worst_res = max(worst_res, abs(trinomial_residual(alpha, float(b), x)))
            if prev_x is not None:
                continuity_ok &= abs(x - prev_x) <= 60.0 * (grid[1] - grid[0])
            prev_x = x
            n_grid += 1
        continuity_ok &= abs(solve_trinomial(alpha, 1e-9) - 1.0) <= 1e-8
    results.append(_worst("maxent", "trinomial back-substitution", worst_res,
                          BACKSUB_TOL, n_grid))
    results.append(CheckResult("maxent", "root branch continuous with x(0) = 1",
                               continuity_ok, f"{n_grid} grid points"))

    worst_series = 0.0
    for alpha in (0.5, 1.0, 2.0):
        for b in np.linspace(-0.2, 0.2, 21):
            x_series, _ = trinomial_series(alpha, float(b))
            worst_series = max(worst_series,
                               abs(x_series - solve_trinomial(alpha, float(b))))
    results.append(_worst("maxent", "series matches closed forms", worst_series,
                          SERIES_MATCH_TOL, 63))

    catalan_ok = True
    for n in range(1, 11):
        exact = math.comb(2 * n, n - 1) // n
        catalan_ok &= math.comb(2 * n, n - 1) % n == 0
        catalan_ok &= exact == math.comb(2 * n, n) // (n + 1)
        catalan_ok &= abs(series_coefficient(2.0, n) - exact) <= 1e-9 * exact
    results.append(CheckResult("maxent", "alpha = 2 coefficients are Catalan",
                               catalan_ok, "n = 1..10, integer identity"))

    xs = np.geomspace(1e-6, 1e6 + math.exp(-1.0), 1000) - math.exp(-1.0)
    worst_w = 0.0
    for x in xs:
        w = lambert_w(float(x))
        worst_w = max(worst_w, abs(w * math.exp(w) - x) / max(1.0, abs(x)))
    w_edges_ok = lambert_w(0.0) == 0.0 and abs(lambert_w(math.e) - 1.0) <= 1e-14
    results.append(_worst("maxent", "Lambert W back-substitution", worst_w,
                          LAMBERT_TOL, len(xs)))
    results.append(CheckResult("maxent", "Lambert W anchors W(0) = 0, W(e) = 1",
                               w_edges_ok, "exact / 1e-14"))

    e3 = np.array([0.0, 1.0, 2.0])
    e5 = np.array([0.0, 0.5, 1.1, 1.7, 2.3])
    worst_stat = 0.0
    all_converged = True
    for q in (0.8, 1.2):
        for alpha in (0.5, 1.0, 2.0):
            for e, omega in ((e3, 0.3), (e5, 0.25)):
                sol = solve_maxent(e, q, alpha, omega)
                all_converged &= sol.converged
                worst_stat = max(worst_stat, sol.stationarity_residual)
    results.append(_worst("maxent", "stationarity residual on (q, alpha) grid",
                          worst_stat, STATIONARITY_TOL, 12))
    results.append(CheckResult("maxent", "all grid solves converged",
                               all_converged, "12 problems"))

    worst_aff = 0.0
    for q in (0.8, 1.2):
        for solver in (solve_maxent, solve_maxent_renyi):
            sol = solver(e3, q, 1.0, 0.4)
            worst_aff = max(worst_aff, _affinity_residual(sol.probs, e3, q))
    results.append(_worst("maxent", "alpha = 1 roots are q-exponential",
                          worst_aff, AFFINITY_TOL, 4))

    worst_oracle = 0.0
    for q, alpha in ((1.2, 2.0), (0.8, 2.0), (1.2, 0.5)):
        sol = solve_maxent(e3, q, alpha, 0.3)
        p_oracle = simplex_constrained_maximizer(e3, q, alpha, sol.escort_mean)
        worst_oracle = max(worst_oracle, float(np.max(np.abs(sol.probs - p_oracle))))
    results.append(_worst("maxent", "n = 3 simplex-grid oracle agreement",
                          worst_oracle, ORACLE_TOL, 3))

    sol_w = solve_maxent_shannon_limit(e3, 1.0 + 1e-7, 0.4)
    logits = -0.4 * e3
    gibbs = np.exp(logits - logits.max())
    gibbs /= gibbs.sum()
    gap_gibbs = float(np.max(np.abs(sol_w.probs - gibbs)))
    results.append(_worst("maxent", "shannon-limit solver matches Gibbs near q = 1",
                          gap_gibbs, GIBBS_LIMIT_TOL, 1))
    sol_w2 = solve_maxent_shannon_limit(np.array([0.0, 1.0]), 1.3, 0.4)
    results.append(_worst("maxent", "shannon-limit stationarity residual",
                          sol_w2.stationarity_residual, STATIONARITY_TOL, 1))

    for name, sol in (
        ("omega = 0 gives uniform", solve_maxent(e3, 1.2, 2.0, 0.0)),
        ("degenerate spectrum gives uniform",
         solve_maxent(np.array([1.5, 1.5, 1.5]), 1.2, 2.0, 5.0)),
    ):
        gap = float(np.max(np.abs(sol.probs - 1.0 / sol.probs.size)))
        results.append(_worst("maxent", name, gap, 1e-12, 1))

    worst_bound = 0.0
    violations = 0
    for _ in range(samples):
        p = _random_distribution(rng)
        q = rng.uniform(0.0, 3.0)
        lhs, rhs = partition_bound_check(p, q)
        if lhs > rhs + BOUND_SLACK:
            violations += 1
    for n in range(2, 9):
        lhs, rhs = partition_bound_check(np.full(n, 1.0 / n), 2.0)
        worst_bound = max(worst_bound, abs(lhs - rhs))
    results.append(CheckResult(
        "maxent", "partition-sum Cauchy-Schwarz bound",
        violations == 0 and worst_bound <= BOUND_SLACK,
        f"{samples} samples, {violations} violations, "
        f"uniform equality gap {worst_bound:.3g}",
    ))
    return results


def _affinity_residual(p: np.ndarray, e: np.ndarray, q: float) -> float:
    """Max deviation of p^(1-q) from the best affine fit in E."""
    y = p ** (1.0 - q)
    coeffs = np.polyfit(e, y, 1)
    return float(np.max(np.abs(np.polyval(coeffs, e) - y)))


def simplex_constrained_maximizer(e, q: float, alpha: float, target_mean: float,
                                  *, coarse: int = 241, rounds: int = 5) -> np.ndarray:
    """Brute-force oracle for 3-level problems.

    Maximizes the rescaled nonadditive entropy over the 2-simplex with the
    q-escort mean pinned to ``target_mean``: scans p1, solves the
    constraint for p2 by bisection along each sign change, evaluates the
    entropy, and refines the p1 grid around the best point.  Shares no
    code with the trinomial-based solver.
    """
    e = np.asarray(e, dtype=float)
    if e.size != 3:
        raise DomainError("oracle is specific to 3-level spectra")
    from .deformation import transform

    q_alpha = transform(q, alpha)
    e1, e2, e3 = float(e[0]), float(e[1]), float(e[2])

    def entropy_of(p1: float, p2: float, p3: float) -> float:
        z = p1**q_alpha + p2**q_alpha + p3**q_alpha
        return (z - 1.0) / (1.0 - q_alpha)

    def mean_gap(p1: float, p2: float) -> float:
        p3 = 1.0 - p1 - p2
        w1, w2, w3 = p1**q, p2**q, p3**q
        return (w1 * e1 + w2 * e2 + w3 * e3) / (w1 + w2 + w3) - target_mean

    eps = 1e-12

    def best_on_slice(p1: float) -> tuple[float, float] | None:
        top = 1.0 - p1 - eps
        if top <= eps:
            return None
        scan = np.linspace(eps, top, 121)
        gaps = [mean_gap(p1, p2) for p2 in scan]
        best = None
        for i in range(len(scan) - 1):
            if gaps[i] == 0.0:
                roots = [scan[i]]
            elif gaps[i] * gaps[i + 1] < 0.0:
                lo, hi = scan[i], scan[i + 1]
                g_lo = gaps[i]
                for _ in range(60):
                    mid = 0.5 * (lo + hi)
                    g_mid = mean_gap(p1, mid)
                    if g_mid == 0.0:
                        lo = hi = mid
                        break
                    if g_lo * g_mid < 0.0:
                        hi = mid
                    else:
                        lo, g_lo = mid, g_mid
                roots = [0.5 * (lo + hi)]
            else:
                continue
            for p2 in roots:
                s = entropy_of(p1, p2, 1.0 - p1 - p2)
                if best is None or s > best[0]:
                    best = (s, p2)
        return best

    lo, hi = eps, 1.0 - 2.0 * eps
    best_s = -math.inf
    best_p = None
    spacing = (hi - lo) / (coarse - 1)
    grid = np.linspace(lo, hi, coarse)
    for round_idx in range(rounds + 1):
        for p1 in grid:
            found = best_on_slice(float(p1))
            if found is not None and found[0] > best_s:
                best_s, best_p = found[0], (float(p1), found[1])
        if best_p is None:
            raise DomainError("oracle found no feasible point on the constraint")
        if round_idx == rounds:
            break
        center = best_p[0]
        span = 2.0 * spacing
        lo = max(eps, center - span)
        hi = min(1.0 - 2.0 * eps, center + span)
        grid = np.linspace(lo, hi, 41)
        spacing = (hi - lo) / 40.0
    p1, p2 = best_p
    return np.array([p1, p2, 1.0 - p1 - p2])


SUITES = {
    "group": run_group_suite,
    "algebra": run_algebra_suite,
    "entropy": run_entropy_suite,
    "maxent": run_maxent_suite,
}


def run_suite(name: str, seed: int) -> list[CheckResult]:
    """Run one named suite (or ``all``) and return its results."""
    if name == "all":
        results: list[CheckResult] = []
        for suite in SUITES.values():
            results.extend(suite(seed))
        return results
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; pick from "
                          f"{sorted(SUITES)} or 'all'")
    return SUITES[name](seed)
