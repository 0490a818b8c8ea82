"""Upper bounds on the sum of the k largest eigenvalues of a symmetric matrix.

Four bound variants share one skeleton: with P = M - (tr M / n) I and theta
the number of eigenvalues below the mean,

* ``variance_bound``        (k/n) tr + sqrt(tr(P^2) (k - t^2/(theta+t))),
                            valid for any integer 1 <= t <= n - theta, k >= t;
* ``variance_bound_strict`` same formula with t = s under the stronger
                            hypothesis lambda_s > tr/n;
* ``inertia_bound``         (k/n) tr + n theta/(2(theta+s))
                            + n/(2(theta+s)) sqrt(theta (k theta + k s - s^2)),
                            requiring lambda_s > tr/n and the top-s mean to
                            clear (tr(M^2)+tr(M))/n - tr(M)^2/n^2;
* ``inertia_pair_bound``    the sharper s = 2 variant (an extra 1/2 inside
                            the radical) under the pairwise hypothesis on
                            lambda_1 + lambda_2.

Spectral hypotheses that fail on the data produce a structured inapplicable
report; parameter misuse raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from spectra_bounds.linalg import (
    Spectrum,
    SymMatrix,
    TraceStats,
    eigh,
    inertia,
    top_k_sum,
    trace_stats,
)
from spectra_bounds.tolerances import EQUALITY_TOL

__all__ = [
    "BoundInput",
    "BoundReport",
    "bound_input",
    "check_mean_condition",
    "inertia_bound",
    "inertia_pair_bound",
    "mohar_bound",
    "nikiforov_pair_bound",
    "variance_bound",
    "variance_bound_strict",
]

# centered_tr2 below this fraction of max(1, tr2-scale) is treated as zero
# (rounding noise on constant-diagonal matrices).
_CTR2_NOISE = 1e-12


@dataclass(frozen=True)
class BoundInput:
    """Inputs shared by the bound family.

    ``spectrum`` is optional; the strict variants refuse (structured
    inapplicable) without it, and the exact top-k sum for slack reporting is
    only available when it is present.
    """

    n: int
    k: int
    tr: float
    centered_tr2: float
    theta: int
    spectrum: Spectrum | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"k must be in [1, {self.n}], got {self.k}")
        if not 0 <= self.theta <= self.n:
            raise ValueError(f"theta must be in [0, {self.n}], got {self.theta}")
        if self.centered_tr2 < 0:
            if self.centered_tr2 < -_CTR2_NOISE * max(1.0, abs(self.tr)):
                raise ValueError("centered_tr2 must be nonnegative")
            object.__setattr__(self, "centered_tr2", 0.0)
        if self.spectrum is not None and self.spectrum.n != self.n:
            raise ValueError("spectrum length does not match n")

    @property
    def mean(self) -> float:
        return self.tr / self.n

    @property
    def eps(self) -> float:
        if self.spectrum is None or self.spectrum.exact:
            return 0.0
        return self.spectrum.tol


def bound_input(M: SymMatrix, k: int, spectrum: Spectrum | None = None) -> BoundInput:
    """Assemble a BoundInput from a matrix (computing the spectrum if needed)."""
    if spectrum is None:
        spectrum = eigh(M)
    stats = trace_stats(M)
    theta = inertia(spectrum, stats.tr / M.n).theta
    return BoundInput(
        n=M.n,
        k=k,
        tr=stats.tr,
        centered_tr2=max(0.0, stats.centered_tr2),
        theta=theta,
        spectrum=spectrum,
    )


@dataclass(frozen=True)
class BoundReport:
    """A bound evaluation: value, applicability, and slack against the truth."""

    value: float
    applicable: bool
    reason: str = ""
    actual: float | None = None
    slack: float | None = None
    equality: bool | None = None


def _report(inp: BoundInput, value: float, eq_tol: float) -> BoundReport:
    if inp.spectrum is None:
        return BoundReport(value=value, applicable=True)
    actual = top_k_sum(inp.spectrum, inp.k)
    slack = value - actual
    return BoundReport(
        value=value,
        applicable=True,
        actual=actual,
        slack=slack,
        equality=abs(slack) <= eq_tol,
    )


def _inapplicable(reason: str) -> BoundReport:
    return BoundReport(value=math.nan, applicable=False, reason=reason)


def variance_bound(inp: BoundInput, t: int, eq_tol: float = EQUALITY_TOL) -> BoundReport:
    """Top-k sum bound from the centered second moment, shift order ``t``.

    Needs only n, k, tr, tr(P^2) and theta; no spectral hypothesis beyond
    t <= n - theta.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if inp.k < t:
        raise ValueError(f"k must be >= t, got k={inp.k}, t={t}")
    if t > inp.n - inp.theta:
        raise ValueError(
            f"t must be <= n - theta = {inp.n - inp.theta}, got {t}"
        )
    if inp.theta == 0 and inp.centered_tr2 > _CTR2_NOISE * max(1.0, inp.tr**2):
        raise ValueError(
            "theta = 0 with positive centered_tr2 is impossible for a symmetric "
            "matrix; inputs are inconsistent"
        )
    radicand = inp.centered_tr2 * (inp.k - t * t / (inp.theta + t))
    value = inp.k * inp.mean + math.sqrt(max(0.0, radicand))
    return _report(inp, value, eq_tol)


def variance_bound_strict(inp: BoundInput, s: int, eq_tol: float = EQUALITY_TOL) -> BoundReport:
    """Same formula as ``variance_bound`` under the hypothesis lambda_s > tr/n."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if inp.k < s:
        raise ValueError(f"k must be >= s, got k={inp.k}, s={s}")
    if inp.spectrum is None:
        return _inapplicable("spectrum required to check lambda_s > tr/n")
    if s > inp.n or inp.spectrum.values[s - 1] <= inp.mean + inp.eps:
        return _inapplicable(f"lambda_{s} is not above the mean eigenvalue")
    return variance_bound(inp, s, eq_tol)


def check_mean_condition(S: Spectrum, stats: TraceStats, s: int) -> bool:
    """True when the mean of the top s eigenvalues reaches
    (tr(M^2) + tr(M))/n - tr(M)^2/n^2 (within tolerance)."""
    if not 1 <= s <= S.n:
        raise ValueError(f"s must be in [1, {S.n}], got {s}")
    n = S.n
    threshold = (stats.tr2 + stats.tr) / n - stats.tr**2 / n**2
    eps = 0.0 if S.exact else S.tol
    return top_k_sum(S, s) / s >= threshold - eps


def inertia_bound(inp: BoundInput, s: int, eq_tol: float = EQUALITY_TOL) -> BoundReport:
    """Inertia-only bound; the value depends on the spectrum solely through theta."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if inp.k < s:
        raise ValueError(f"k must be >= s, got k={inp.k}, s={s}")
    if inp.spectrum is None:
        return _inapplicable("spectrum required to check the hypotheses")
    if s > inp.n or inp.spectrum.values[s - 1] <= inp.mean + inp.eps:
        return _inapplicable(f"lambda_{s} is not above the mean eigenvalue")
    stats_tr2 = inp.centered_tr2 + inp.tr**2 / inp.n
    threshold = (stats_tr2 + inp.tr) / inp.n - inp.tr**2 / inp.n**2
    if top_k_sum(inp.spectrum, s) / s < threshold - inp.eps:
        return _inapplicable(f"mean of the top {s} eigenvalues is below the threshold")
    if inp.theta < 1:
        return _inapplicable("no eigenvalues below the mean")
    n, k, th = inp.n, inp.k, inp.theta
    value = k * inp.mean + n * th / (2 * (th + s)) + n / (2 * (th + s)) * math.sqrt(
        th * (k * th + k * s - s * s)
    )
    return _report(inp, value, eq_tol)


def inertia_pair_bound(inp: BoundInput, eq_tol: float = EQUALITY_TOL) -> BoundReport:
    """Sharper s = 2 inertia bound under the pairwise top-two hypothesis."""
    if inp.k < 2:
        raise ValueError(f"k must be >= 2, got {inp.k}")
    if inp.spectrum is None:
        return _inapplicable("spectrum required to check the hypotheses")
    if inp.n < 2 or inp.spectrum.values[1] <= inp.mean + inp.eps:
        return _inapplicable("lambda_2 is not above the mean eigenvalue")
    stats_tr2 = inp.centered_tr2 + inp.tr**2 / inp.n
    threshold = 2 * (stats_tr2 + inp.tr) / inp.n - 2 * inp.tr**2 / inp.n**2
    if top_k_sum(inp.spectrum, 2) < threshold - inp.eps:
        return _inapplicable("lambda_1 + lambda_2 is below the pairwise threshold")
    if inp.theta < 1:
        return _inapplicable("no eigenvalues below the mean")
    n, k, th = inp.n, inp.k, inp.theta
    value = k * inp.mean + n * th / (2 * (th + 2)) + n / (2 * (th + 2)) * math.sqrt(
        th * (k * th + 2 * k - 4) / 2.0
    )
    return _report(inp, value, eq_tol)


def mohar_bound(n: int, k: int) -> float:
    """Classical (n/2)(sqrt(k) + 1) comparator."""
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    return n / 2 * (math.sqrt(k) + 1)


def nikiforov_pair_bound(n: int) -> float:
    """Comparator for lambda_1 + lambda_2 of a graph: 2n/sqrt(3)."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * n / math.sqrt(3)
