# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled eigensolver kernel.

Same algorithm as ``_eig_py`` (Householder tridiagonalization + implicit-shift
QL); that module is the readable reference, this one is the fast path.
Parity between the two is enforced by tests.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport copysign, fabs, hypot, sqrt

from spectra_bounds._eig_py import MAX_MASK_VERTICES, MAX_SWEEPS, ConvergenceError

cnp.import_array()

cdef double _MACHEPS = 2.220446049250313e-16
cdef double _TINY = 1e-300
cdef int _MAX_SWEEPS = 64
cdef int _MAX_MASK_N = 11


cdef void _tridiagonalize(double* a, int n, bint vectors, double* d, double* e) noexcept nogil:
    cdef int i, j, k, l
    cdef double h, scale, f, g, hh
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        scale = 0.0
        if l > 0:
            for k in range(l + 1):
                scale += fabs(a[i * n + k])
            if scale == 0.0:
                e[i] = a[i * n + l]
            else:
                for k in range(l + 1):
                    a[i * n + k] /= scale
                    h += a[i * n + k] * a[i * n + k]
                f = a[i * n + l]
                g = -sqrt(h) if f >= 0.0 else sqrt(h)
                e[i] = scale * g
                h -= f * g
                a[i * n + l] = f - g
                f = 0.0
                for j in range(l + 1):
                    if vectors:
                        a[j * n + i] = a[i * n + j] / h
                    g = 0.0
                    for k in range(j + 1):
                        g += a[j * n + k] * a[i * n + k]
                    for k in range(j + 1, l + 1):
                        g += a[k * n + j] * a[i * n + k]
                    e[j] = g / h
                    f += e[j] * a[i * n + j]
                hh = f / (h + h)
                for j in range(l + 1):
                    f = a[i * n + j]
                    g = e[j] - hh * f
                    e[j] = g
                    for k in range(j + 1):
                        a[j * n + k] -= f * e[k] + g * a[i * n + k]
        else:
            e[i] = a[i * n + l]
        d[i] = h

    if vectors:
        d[0] = 0.0
        e[0] = 0.0
        for i in range(n):
            if d[i] != 0.0:
                for j in range(i):
                    g = 0.0
                    for k in range(i):
                        g += a[i * n + k] * a[k * n + j]
                    for k in range(i):
                        a[k * n + j] -= g * a[k * n + i]
            d[i] = a[i * n + i]
            a[i * n + i] = 1.0
            for j in range(i):
                a[j * n + i] = 0.0
                a[i * n + j] = 0.0
    else:
        for i in range(n):
            d[i] = a[i * n + i]
        e[0] = 0.0


cdef int _ql_implicit(double* d, double* e, int n, double* z) noexcept nogil:
    """Returns 0 on success, the 1-based failing eigenvalue index on failure."""
    cdef int i, k, l, m, sweeps
    cdef double dd, g, r, s, c, p, f, b
    cdef bint underflow
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= _MACHEPS * dd + _TINY:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_SWEEPS:
                return l + 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
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
                if z != NULL:
                    for k in range(n):
                        f = z[k * n + i + 1]
                        z[k * n + i + 1] = s * z[k * n + i] + c * f
                        z[k * n + i] = c * z[k * n + i] - s * f
            if not underflow:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return 0


cdef void _sort_desc(double* d, int n) noexcept nogil:
    cdef int i, j
    cdef double key
    for i in range(1, n):
        key = d[i]
        j = i - 1
        while j >= 0 and d[j] < key:
            d[j + 1] = d[j]
            j -= 1
        d[j + 1] = key


def _prepare(mat):
    a = np.array(mat, dtype=np.float64, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("empty matrix")
    return a


def sym_eigenvalues(mat):
    """Eigenvalues of a symmetric matrix, descending."""
    a = _prepare(mat)
    cdef int n = a.shape[0]
    cdef double[:, ::1] av = a
    d_arr = np.empty(n)
    e_arr = np.empty(n)
    cdef double[::1] d = d_arr
    cdef double[::1] e = e_arr
    cdef int status
    with nogil:
        _tridiagonalize(&av[0, 0], n, False, &d[0], &e[0])
        status = _ql_implicit(&d[0], &e[0], n, NULL)
        if status == 0:
            _sort_desc(&d[0], n)
    if status:
        raise ConvergenceError(
            f"eigenvalue {status - 1} not isolated after {MAX_SWEEPS} sweeps"
        )
    return d_arr


def sym_eigensystem(mat):
    """Eigenvalues (descending) and matching orthonormal eigenvector columns."""
    a = _prepare(mat)
    cdef int n = a.shape[0]
    cdef double[:, ::1] av = a
    d_arr = np.empty(n)
    e_arr = np.empty(n)
    cdef double[::1] d = d_arr
    cdef double[::1] e = e_arr
    cdef int status
    with nogil:
        _tridiagonalize(&av[0, 0], n, True, &d[0], &e[0])
        status = _ql_implicit(&d[0], &e[0], n, &av[0, 0])
    if status:
        raise ConvergenceError(
            f"eigenvalue {status - 1} not isolated after {MAX_SWEEPS} sweeps"
        )
    order = np.argsort(-d_arr, kind="stable")
    return d_arr[order], a[:, order]


def graph_spectra_batch(n, masks, laplacian):
    """Spectra of adjacency/Laplacian matrices for edge-mask encoded graphs.

    Mask bit order matches ``_eig_py.graph_spectra_batch``.
    """
    if not 1 <= n <= _MAX_MASK_N:
        raise ValueError(f"mask-encoded graphs support 1 <= n <= {MAX_MASK_VERTICES}")
    masks_arr = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef unsigned long long[::1] mv = masks_arr
    cdef Py_ssize_t nmasks = mv.shape[0]
    out_arr = np.empty((nmasks, n))
    sizes_arr = np.empty(nmasks, dtype=np.int64)
    cdef double[:, ::1] out = out_arr
    cdef long long[::1] sizes = sizes_arr
    cdef int nn = n
    cdef bint lap = bool(laplacian)

    cdef int pi[55]
    cdef int pj[55]
    cdef int b = 0
    cdef int i, j
    for i in range(nn):
        for j in range(i + 1, nn):
            pi[b] = i
            pj[b] = j
            b += 1
    cdef int nbits = b

    cdef double a[121]
    cdef double d[11]
    cdef double e[11]
    cdef unsigned long long mask
    cdef Py_ssize_t g
    cdef int m_edges, status = 0, bad = -1
    with nogil:
        for g in range(nmasks):
            mask = mv[g]
            for i in range(nn * nn):
                a[i] = 0.0
            m_edges = 0
            for b in range(nbits):
                if (mask >> b) & 1:
                    m_edges += 1
                    i = pi[b]
                    j = pj[b]
                    if lap:
                        a[i * nn + j] = -1.0
                        a[j * nn + i] = -1.0
                        a[i * nn + i] += 1.0
                        a[j * nn + j] += 1.0
                    else:
                        a[i * nn + j] = 1.0
                        a[j * nn + i] = 1.0
            _tridiagonalize(a, nn, False, d, e)
            status = _ql_implicit(d, e, nn, NULL)
            if status:
                bad = g
                break
            _sort_desc(d, nn)
            for i in range(nn):
                out[g, i] = d[i]
            sizes[g] = m_edges
    if status:
        raise ConvergenceError(
            f"graph #{bad}: eigenvalue {status - 1} not isolated after {MAX_SWEEPS} sweeps"
        )
    return out_arr, sizes_arr
