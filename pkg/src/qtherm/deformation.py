"""The one-parameter rescaling group of the nonadditivity index q.

The map q -> q_alpha = 1 + (q - 1)/alpha rescales the nonadditive coupling
(1 - q) by 1/alpha.  Under composition of scale factors it forms a group:
(q_alpha)_beta = q_{alpha*beta}, q_1 = q, and 1_alpha = 1 for every alpha.
The special choices alpha = -1 and alpha = -q give the additive (2 - q) and
multiplicative (1/q) dualities.  Two physical parameter maps are included:
a finite heat bath of N particles, q(N) = N/(N-1), and a bath with
temperature fluctuations, q = 1 - 1/C + rel_fluct.
"""

from __future__ import annotations

import math
import warnings

from .errors import DomainError, DualityRangeWarning

# Dualities are conventionally restricted to q in [0, 2]; outside that range
# the group is still well defined, so we only warn.
DUALITY_RANGE = (0.0, 2.0)


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def transform(q: float, alpha: float) -> float:
    """Rescale the nonadditivity index: q_alpha = 1 + (q - 1)/alpha.

    Computed in the centered form so that transform(1, alpha) == 1 and
    (q_alpha - 1)*alpha == q - 1 hold to the last bit.
    """
    q = _require_finite("q", q)
    alpha = _require_finite("alpha", alpha)
    if alpha == 0.0:
        raise DomainError("alpha must be nonzero")
    if alpha == 1.0:
        return q
    return 1.0 + (q - 1.0) / alpha


def compose(alpha: float, beta: float) -> float:
    """Combine two scale factors; transform(q, alpha*beta) applies both."""
    alpha = _require_finite("alpha", alpha)
    beta = _require_finite("beta", beta)
    if alpha == 0.0 or beta == 0.0:
        raise DomainError("scale factors must be nonzero")
    product = alpha * beta
    if not math.isfinite(product):
        raise DomainError(f"composed scale factor overflows: {alpha} * {beta}")
    return product


def additive_dual(q: float) -> float:
    """Additive duality q -> 2 - q (the alpha = -1 group element)."""
    q = _require_finite("q", q)
    out = 2.0 - q
    _warn_if_outside_range(out)
    return out


def multiplicative_dual(q: float) -> float:
    """Multiplicative duality q -> 1/q (the q-dependent choice alpha = -q)."""
    q = _require_finite("q", q)
    if q == 0.0:
        raise DomainError("multiplicative dual is undefined at q = 0")
    out = 1.0 / q
    _warn_if_outside_range(out)
    return out


def _warn_if_outside_range(q: float) -> None:
    lo, hi = DUALITY_RANGE
    if q < lo or q > hi:
        warnings.warn(
            f"duality output q = {q:g} lies outside [{lo:g}, {hi:g}]",
            DualityRangeWarning,
            stacklevel=3,
        )


def heat_bath_q(n_particles: float) -> float:
    """Nonadditivity index of a finite heat bath: q(N) = N/(N-1).

    Accepts any real count N > 1 so that rescaled (fractional) baths from
    :func:`rescale_bath` can be mapped back to an index.
    """
    n = _require_finite("n_particles", n_particles)
    if n <= 1.0:
        raise DomainError(f"need more than one bath particle, got {n:g}")
    return n / (n - 1.0)


def rescale_bath(n_particles: float, alpha: float) -> float:
    """Rescale the bath size: N_alpha = alpha*(N - 1) + 1.

    Returns a real number; fractional particle counts are not rounded.
    Consistency: heat_bath_q(rescale_bath(N, a)) == transform(heat_bath_q(N), a).
    """
    n = _require_finite("n_particles", n_particles)
    alpha = _require_finite("alpha", alpha)
    if n <= 1.0:
        raise DomainError(f"need more than one bath particle, got {n:g}")
    if alpha <= 0.0:
        raise DomainError("alpha must be positive to keep the bath above one particle")
    return alpha * (n - 1.0) + 1.0


def fluctuation_q(heat_capacity: float, rel_fluct: float) -> float:
    """Index of a bath with temperature fluctuations: q = 1 - 1/C + rel_fluct.

    ``heat_capacity`` is C in units of k_B (may be negative for a finite
    reservoir); ``rel_fluct`` is the relative squared inverse-temperature
    fluctuation and must be non-negative.
    """
    c = _require_finite("heat_capacity", heat_capacity)
    r = _require_finite("rel_fluct", rel_fluct)
    if c == 0.0:
        raise DomainError("heat capacity must be nonzero")
    if r < 0.0:
        raise DomainError("relative fluctuation must be non-negative")
    return 1.0 - 1.0 / c + r


def rescaled_fluctuation(rel_fluct: float, alpha: float) -> float:
    """Relative fluctuation after rescaling the index: rel_fluct/alpha.

    Valid in the large-fluctuation regime where 1/C is negligible; there
    q_alpha - 1 equals the rescaled fluctuation directly.
    """
    r = _require_finite("rel_fluct", rel_fluct)
    alpha = _require_finite("alpha", alpha)
    if r < 0.0:
        raise DomainError("relative fluctuation must be non-negative")
    if alpha <= 0.0:
        raise DomainError("alpha must be positive")
    return r / alpha
