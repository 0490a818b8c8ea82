"""Dense symmetric eigendecomposition, trace statistics, and inertia.

All types are immutable after construction and all operations are pure, so
everything here is safe to use concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from spectra_bounds import backend
from spectra_bounds.backend import ConvergenceError
from spectra_bounds.tolerances import classification_eps

__all__ = [
    "ConvergenceError",
    "Inertia",
    "Spectrum",
    "SymMatrix",
    "TraceStats",
    "build_symmetric",
    "distinct_values",
    "eigh",
    "inertia",
    "top_k_sum",
    "trace_stats",
]

# Residual acceptance for eigh: ||Q diag(w) Q^T - M||_F <= RESIDUAL_SCALE * max(1, ||M||_F).
RESIDUAL_SCALE = 1e-9


@dataclass(frozen=True)
class SymMatrix:
    """Dense real symmetric matrix."""

    mat: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.mat, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise ValueError("matrix must have positive dimension")
        if not np.isfinite(a).all():
            raise ValueError("matrix entries must be finite")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix must be symmetric")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "mat", a)

    @property
    def n(self) -> int:
        return self.mat.shape[0]

    @property
    def fro_norm(self) -> float:
        return float(np.linalg.norm(self.mat))


def build_symmetric(n: int, upper_entries) -> SymMatrix:
    """Assemble an n-by-n symmetric matrix from its upper triangle.

    ``upper_entries`` lists the entries row by row including the diagonal:
    (0,0), (0,1), ..., (0,n-1), (1,1), ...  Length must be n(n+1)/2.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    entries = [float(x) for x in upper_entries]
    expected = n * (n + 1) // 2
    if len(entries) != expected:
        raise ValueError(f"expected {expected} upper-triangle entries, got {len(entries)}")
    if not all(math.isfinite(x) for x in entries):
        raise ValueError("entries must be finite")
    a = np.zeros((n, n))
    pos = 0
    for i in range(n):
        for j in range(i, n):
            a[i, j] = entries[pos]
            a[j, i] = entries[pos]
            pos += 1
    return SymMatrix(a)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order with their classification tolerance.

    ``exact`` marks spectra produced by a closed form; those bypass all
    tolerance logic.
    """

    values: np.ndarray
    tol: float
    exact: bool = False

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("spectrum must be a nonempty 1-d array")
        if np.any(v[:-1] < v[1:]):
            raise ValueError("spectrum must be sorted descending")
        if self.tol < 0:
            raise ValueError("tolerance must be nonnegative")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def n(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class Inertia:
    """Counts of eigenvalues above / below / at a center value."""

    nu: int
    theta: int
    zero: int
    center: float
    eps: float


@dataclass(frozen=True)
class TraceStats:
    """tr(M), tr(M^2), and the centered second moment tr((M - (tr M / n) I)^2)."""

    tr: float
    tr2: float
    centered_tr2: float


def eigh(M: SymMatrix) -> Spectrum:
    """Full spectrum of ``M``, descending, residual-checked.

    Raises ConvergenceError if the QL iteration stalls or the reconstruction
    residual exceeds the acceptance threshold; a partial result is never
    returned.
    """
    values, q = backend.sym_eigensystem(M.mat)
    scale = max(1.0, M.fro_norm)
    residual = np.linalg.norm((q * values) @ q.T - M.mat)
    if residual > RESIDUAL_SCALE * scale:
        raise ConvergenceError(
            f"reconstruction residual {residual:.3e} exceeds {RESIDUAL_SCALE * scale:.3e}"
        )
    return Spectrum(values=values, tol=classification_eps(M.fro_norm))


def trace_stats(M: SymMatrix) -> TraceStats:
    """Trace statistics computed directly from the entries, not eigenvalues."""
    tr = float(np.trace(M.mat))
    tr2 = float(np.sum(M.mat * M.mat))
    return TraceStats(tr=tr, tr2=tr2, centered_tr2=tr2 - tr * tr / M.n)


def inertia(S: Spectrum, center: float, eps: float | None = None) -> Inertia:
    """Counts strictly above center+eps, strictly below center-eps, rest at center."""
    if eps is None:
        eps = 0.0 if S.exact else S.tol
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    nu = int(np.count_nonzero(S.values > center + eps))
    theta = int(np.count_nonzero(S.values < center - eps))
    return Inertia(nu=nu, theta=theta, zero=S.n - nu - theta, center=center, eps=eps)


def top_k_sum(S: Spectrum, k: int) -> float:
    """Sum of the k largest eigenvalues."""
    if not 1 <= k <= S.n:
        raise ValueError(f"k must be in [1, {S.n}], got {k}")
    return float(S.values[:k].sum())


def distinct_values(S: Spectrum) -> list[tuple[float, int]]:
    """Eigenvalue clusters as (representative, multiplicity), descending.

    Exact spectra cluster by equality; numeric spectra split wherever the
    gap between consecutive values exceeds the clustering threshold (a
    hundredfold of the classification tolerance, per the tolerance policy).
    """
    gap = 0.0 if S.exact else 100.0 * S.tol
    clusters: list[tuple[float, int]] = []
    run_start = 0
    v = S.values
    for i in range(1, S.n + 1):
        if i == S.n or v[i - 1] - v[i] > gap:
            clusters.append((float(v[run_start]), i - run_start))
            run_start = i
    return clusters
