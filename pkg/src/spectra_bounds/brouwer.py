"""Eigenvalue-sum conjecture bookkeeping for graph Laplacians.

For a graph with m edges the conjectured inequality says the sum of the k
largest Laplacian eigenvalues is at most m + C(k+1, 2) for every
k in {1, ..., n-1}.  This module computes per-k slacks, the degree-power
comparison gap, and an exact quadratic certificate in m that implies the
inequality for every graph with the given (n, m, k) through the Laplacian
bound machinery.

Sign decisions near the certificate's roots drive mathematical claims, so
everything about it is exact integer/rational arithmetic; floats are not
allowed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from spectra_bounds import backend
from spectra_bounds.graphs import ExactSpectrum, Graph, laplacian, to_graph6
from spectra_bounds.linalg import Spectrum, eigh

__all__ = [
    "BrouwerReport",
    "CertCoeffs",
    "DualTransfer",
    "batch_min_slacks",
    "brouwer_slacks",
    "cert_boundary_identity",
    "cert_coeffs",
    "cert_eval",
    "de_caen_gap",
    "dual_transfer",
    "explicit_threshold",
    "sufficient_guarantee",
]


@dataclass(frozen=True)
class BrouwerReport:
    """Per-k slacks m + C(k+1,2) - sum of k largest Laplacian eigenvalues.

    ``slacks[k-1]`` covers k = 1..n; the conjecture proper ranges over
    k <= n-1, and ``min_slack``/``min_k`` minimize over that range (all of
    k=1..n when n == 1).  The graph satisfies the conjecture exactly when
    ``min_slack >= 0``.
    """

    graph6: str
    n: int
    m: int
    slacks: tuple
    min_slack: object
    min_k: int

    @property
    def holds(self) -> bool:
        return self.min_slack >= 0


def brouwer_slacks(G: Graph, spectrum: Spectrum | ExactSpectrum | None = None) -> BrouwerReport:
    """Slack report for one graph; exact when an exact spectrum is supplied."""
    n, m = G.n, G.m
    if isinstance(spectrum, ExactSpectrum):
        if spectrum.n != n:
            raise ValueError("spectrum order mismatch")
        values = [v.as_fraction() for v, mult in spectrum.entries for _ in range(mult)]
        running = Fraction(0)
        slacks = []
        for k in range(1, n + 1):
            running += values[k - 1]
            slacks.append(m + Fraction(k * (k + 1), 2) - running)
    else:
        if spectrum is None:
            spectrum = eigh(laplacian(G))
        psums = np.cumsum(spectrum.values)
        slacks = [
            float(m + k * (k + 1) // 2 - psums[k - 1]) for k in range(1, n + 1)
        ]
    upto = n - 1 if n >= 2 else 1
    min_k = min(range(1, upto + 1), key=lambda k: slacks[k - 1])
    return BrouwerReport(
        graph6=to_graph6(G),
        n=n,
        m=m,
        slacks=tuple(slacks),
        min_slack=slacks[min_k - 1],
        min_k=min_k,
    )


def batch_min_slacks(n: int, masks) -> tuple[np.ndarray, np.ndarray]:
    """Minimum slack over k in [1, n-1] for each edge-mask encoded graph.

    Returns (min_slack, argmin_k) arrays; the workhorse of the exhaustive
    sweeps.
    """
    spectra, sizes = backend.graph_spectra_batch(n, masks, laplacian=True)
    psums = np.cumsum(spectra, axis=1)
    ks = np.arange(1, n + 1)
    rhs = sizes[:, None] + (ks * (ks + 1) // 2)[None, :]
    slacks = rhs - psums
    upto = n - 1 if n >= 2 else 1
    window = slacks[:, :upto]
    amin = np.argmin(window, axis=1)
    return window[np.arange(window.shape[0]), amin], amin + 1


def de_caen_gap(G: Graph) -> Fraction:
    """Slack of the degree-power bound: 2m^2/(n-1) + (n-2)m - sum d_i^2.

    Exact; nonnegative for every simple graph.
    """
    n, m = G.n, G.m
    if n < 2:
        return Fraction(0)
    degree_power = int((G.degrees.astype(np.int64) ** 2).sum())
    return Fraction(2 * m * m, n - 1) + (n - 2) * m - degree_power


# ---------------------------------------------------------------------------
# The certificate polynomial f(m) = (a1 m^2 + a2 m + a3) / (4 (n-1) n^2)


@dataclass(frozen=True)
class CertCoeffs:
    """Exact integer coefficients of the certificate quadratic in m."""

    a1: int
    a2: int
    a3: int


def cert_coeffs(n: int, k: int) -> CertCoeffs:
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    a1 = 4 * n**3 - (8 * k + 12) * n**2 + (16 * k**2 + 32 * k - 16) * n - 16 * k**2 - 32 * k + 48
    a2 = (
        (-4 * k + 4) * n**4
        + (4 * k**2 + 4) * n**3
        - (8 * k**3 + 4 * k**2 - 28 * k + 56) * n**2
        + (8 * k**3 - 24 * k + 48) * n
    )
    a3 = (
        -4 * k * n**5
        + (4 * k**2 + 4 * k + 12) * n**4
        + (k**4 - 2 * k**3 - 7 * k**2 + 4 * k - 24) * n**3
        - (k**4 - 2 * k**3 - 3 * k**2 + 4 * k - 12) * n**2
    )
    return CertCoeffs(a1=a1, a2=a2, a3=a3)


def cert_eval(n: int, k: int, m: int) -> Fraction:
    """Certificate value at edge count m, exact."""
    c = cert_coeffs(n, k)
    return Fraction(c.a1 * m * m + c.a2 * m + c.a3, 4 * (n - 1) * n * n)


def cert_boundary_identity(n: int, k: int) -> bool:
    """Exact check of the closed form of f((k+1) n) * (4n - 4) as a quartic in k."""
    lhs = cert_eval(n, k, (k + 1) * n) * (4 * n - 4)
    rhs = (
        (4 * k + 8) * n**3
        - (4 * k**3 + 20 * k**2 + 24 * k - 4) * n**2
        + (9 * k**4 + 50 * k**3 + 81 * k**2 - 24 * k - 96) * n
        - 9 * k**4
        - 54 * k**3
        - 53 * k**2
        + 84 * k
        + 108
    )
    return lhs == rhs


def sufficient_guarantee(n: int, m: int, k: int) -> bool:
    """True when the certificate proves the conjectured inequality at (n, m, k)
    for EVERY graph with that order and size.

    Requires the edge-count hypothesis m >= (k+1) n.  The certificate is
    positivity of f on [(k+1) n, m]: positive at both ends, and either the
    parabola opens upward with its vertex left of the interval or it has no
    real roots at all.  All checks are exact.
    """
    boundary = (k + 1) * n
    if m < boundary:
        raise ValueError(f"edge-count hypothesis needs m >= (k+1) n = {boundary}, got {m}")
    c = cert_coeffs(n, k)
    if cert_eval(n, k, m) <= 0 or cert_eval(n, k, boundary) <= 0:
        return False
    if c.a1 <= 0:
        return False
    if Fraction(-c.a2, 2 * c.a1) <= boundary:
        return True
    return c.a2 * c.a2 - 4 * c.a1 * c.a3 < 0


def explicit_threshold(n: int, k: int) -> int | None:
    """Edge-count threshold beyond which the conjecture is guaranteed at this k.

    Supported for k = 3 (3n + 9, valid from n = 4) and k = 4 (4n + 17, valid
    from n = 6); None when n is below the validity range.
    """
    if k == 3:
        return 3 * n + 9 if n >= 4 else None
    if k == 4:
        return 4 * n + 17 if n >= 6 else None
    raise ValueError(f"explicit thresholds cover k in {{3, 4}}, got k={k}")


@dataclass(frozen=True)
class DualTransfer:
    """Complement duality: a guarantee for dense graphs at index p transfers
    to sparse graphs at index n - p - 1.

    If the conjecture holds for all graphs with m >= s at k = p, it holds for
    all graphs with m <= C(n, 2) - s at k = n - p - 1.  ``vacuous`` flags an
    empty transferred range.
    """

    n: int
    p: int
    s: int
    k_dual: int
    m_max: int

    @property
    def vacuous(self) -> bool:
        return self.m_max < 0


def dual_transfer(n: int, p: int, s: int) -> DualTransfer:
    if n < 2 or not 1 <= p <= n - 1 or s < 0:
        raise ValueError("need n >= 2, 1 <= p <= n-1, s >= 0")
    return DualTransfer(n=n, p=p, s=s, k_dual=n - p - 1, m_max=n * (n - 1) // 2 - s)
