"""Pure-Python eigensolver kernel.

Dense symmetric eigenvalues via Householder reduction to tridiagonal form
followed by QL iteration with implicit Wilkinson shifts.  This is the
fallback twin of the compiled extension ``_eig_c``; the two implement the
same algorithm and are held together by parity tests.

Eigenvalues are always returned in descending order.
"""

from __future__ import annotations

import math

import numpy as np

MAX_SWEEPS = 64
_MACHEPS = 2.220446049250313e-16
_TINY = 1e-300

# Largest vertex count whose edge mask fits in 64 bits: C(11,2) = 55.
MAX_MASK_VERTICES = 11


class ConvergenceError(RuntimeError):
    """QL iteration failed to isolate an eigenvalue within MAX_SWEEPS."""


def _tridiagonalize(a: list[list[float]], n: int, vectors: bool) -> tuple[list[float], list[float]]:
    """Householder reduction of the symmetric matrix ``a`` (modified in place).

    Returns the diagonal ``d`` and subdiagonal ``e`` (``e[0]`` unused).
    When ``vectors`` is set, ``a`` is overwritten with the accumulated
    orthogonal factor Z such that the input equals Z T Z^T.
    """
    d = [0.0] * n
    e = [0.0] * n
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        scale = 0.0
        if l > 0:
            for k in range(l + 1):
                scale += abs(a[i][k])
            if scale == 0.0:
                e[i] = a[i][l]
            else:
                for k in range(l + 1):
                    a[i][k] /= scale
                    h += a[i][k] * a[i][k]
                f = a[i][l]
                g = -math.sqrt(h) if f >= 0.0 else math.sqrt(h)
                e[i] = scale * g
                h -= f * g
                a[i][l] = f - g
                f = 0.0
                for j in range(l + 1):
                    if vectors:
                        a[j][i] = a[i][j] / h
                    g = 0.0
                    for k in range(j + 1):
                        g += a[j][k] * a[i][k]
                    for k in range(j + 1, l + 1):
                        g += a[k][j] * a[i][k]
                    e[j] = g / h
                    f += e[j] * a[i][j]
                hh = f / (h + h)
                for j in range(l + 1):
                    f = a[i][j]
                    e[j] = g = e[j] - hh * f
                    for k in range(j + 1):
                        a[j][k] -= f * e[k] + g * a[i][k]
        else:
            e[i] = a[i][l]
        d[i] = h

    if vectors:
        d[0] = 0.0
        e[0] = 0.0
        for i in range(n):
            if d[i] != 0.0:
                for j in range(i):
                    g = 0.0
                    for k in range(i):
                        g += a[i][k] * a[k][j]
                    for k in range(i):
                        a[k][j] -= g * a[k][i]
            d[i] = a[i][i]
            a[i][i] = 1.0
            for j in range(i):
                a[j][i] = 0.0
                a[i][j] = 0.0
    else:
        for i in range(n):
            d[i] = a[i][i]
        e[0] = 0.0
    return d, e


def _ql_implicit(
    d: list[float], e: list[float], n: int, z: list[list[float]] | None
) -> None:
    """QL iteration with implicit shifts on the tridiagonal (d, e).

    ``e`` enters with the subdiagonal in positions 1..n-1 and is destroyed.
    ``d`` exits holding the eigenvalues (unsorted).  When ``z`` is given its
    columns accumulate the rotations.
    """
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _MACHEPS * dd + _TINY:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > MAX_SWEEPS:
                raise ConvergenceError(
                    f"eigenvalue {l} not isolated after {MAX_SWEEPS} sweeps"
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    # Deflate: the rotation chain collapsed early.
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    for k in range(n):
                        f = z[k][i + 1]
                        z[k][i + 1] = s * z[k][i] + c * f
                        z[k][i] = c * z[k][i] - s * f
            if not underflow:
                d[l] -= p
                e[l] = g
                e[m] = 0.0


def _solve(mat, vectors: bool):
    a = np.asarray(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    rows = [list(map(float, a[i])) for i in range(n)]
    d, e = _tridiagonalize(rows, n, vectors)
    _ql_implicit(d, e, n, rows if vectors else None)
    order = sorted(range(n), key=lambda i: -d[i])
    values = np.array([d[i] for i in order])
    if not vectors:
        return values, None
    q = np.empty((n, n))
    for j, src in enumerate(order):
        for i in range(n):
            q[i, j] = rows[i][src]
    return values, q


def sym_eigenvalues(mat) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, descending."""
    values, _ = _solve(mat, vectors=False)
    return values


def sym_eigensystem(mat) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and matching orthonormal eigenvector columns."""
    values, q = _solve(mat, vectors=True)
    return values, q


def _mask_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_spectra_batch(n: int, masks, laplacian: bool) -> tuple[np.ndarray, np.ndarray]:
    """Spectra of adjacency (or Laplacian) matrices for edge-mask encoded graphs.

    Bit b of a mask is the edge ``pairs[b]`` with pairs enumerated
    (0,1), (0,2), ..., (0,n-1), (1,2), ...  Returns ``(spectra, sizes)``
    where ``spectra[g]`` holds the eigenvalues of graph ``g`` descending and
    ``sizes[g]`` its edge count.
    """
    if not 1 <= n <= MAX_MASK_VERTICES:
        raise ValueError(f"mask-encoded graphs support 1 <= n <= {MAX_MASK_VERTICES}")
    pairs = _mask_pairs(n)
    masks = np.asarray(masks, dtype=np.uint64)
    out = np.empty((masks.shape[0], n))
    sizes = np.empty(masks.shape[0], dtype=np.int64)
    for g, mask in enumerate(masks):
        mask = int(mask)
        rows = [[0.0] * n for _ in range(n)]
        m_edges = 0
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                m_edges += 1
                if laplacian:
                    rows[i][j] = -1.0
                    rows[j][i] = -1.0
                    rows[i][i] += 1.0
                    rows[j][j] += 1.0
                else:
                    rows[i][j] = 1.0
                    rows[j][i] = 1.0
        d, e = _tridiagonalize(rows, n, vectors=False)
        _ql_implicit(d, e, n, None)
        d.sort(reverse=True)
        out[g] = d
        sizes[g] = m_edges
    return out, sizes
