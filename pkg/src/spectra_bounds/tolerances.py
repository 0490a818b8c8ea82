"""Numerical tolerance policy.

Everything the library classifies (inertia counts, distinct-eigenvalue
clusters, bound equality) is tolerance-driven; the constants here are the
single source of truth.  Spectra obtained from closed forms carry
``exact=True`` and bypass these entirely.
"""

from __future__ import annotations

import os

# Scale-relative eigenvalue classification: eps = EPS_SCALE * max(1, ||M||_F).
# Far below the >=1 spectral gaps of the integer-spectrum graph families
# used in the equality tests.
EPS_SCALE = 1e-9

# Distinct-eigenvalue clustering uses a wider gap threshold.
DISTINCT_GAP_SCALE = 1e-7

# A bound is "violated" when value - actual < -SOUNDNESS_TOL.
SOUNDNESS_TOL = 1e-8

# A bound is "attained" when |value - actual| <= EQUALITY_TOL.
EQUALITY_TOL = 1e-7

ENV_TOL = "SPECTRA_BOUNDS_TOL"


def classification_eps(scale: float) -> float:
    """Classification tolerance for a matrix of Frobenius norm ``scale``."""
    return EPS_SCALE * max(1.0, scale)


def distinct_gap(scale: float) -> float:
    """Gap threshold separating distinct eigenvalue clusters."""
    return DISTINCT_GAP_SCALE * max(1.0, scale)


def env_tolerance() -> float | None:
    """Tolerance override from the environment, if set."""
    raw = os.environ.get(ENV_TOL, "").strip()
    if not raw:
        return None
    value = float(raw)
    if value < 0.0:
        raise ValueError(f"{ENV_TOL} must be nonnegative, got {value}")
    return value
