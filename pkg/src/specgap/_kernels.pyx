# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the dense symmetric eigenvalue kernels.

This mirrors `specgap._kernels_py` function-for-function; see that module
for the full contracts.  The loops here are written out explicitly over C
memoryviews, which is what makes compilation worthwhile — per-iteration
Python/NumPy dispatch overhead dominates the pure build on the small dense
matrices this package works with.
"""

from libc.math cimport fabs, sqrt

import numpy as np

__all__ = ["power_iteration", "jacobi_eigh"]


def power_iteration(mat, start, double tol, int max_iter):
    """Dominant eigenpair of a symmetric matrix by power iteration.

    Returns ``(value, vector, residual, iterations, converged)``.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    cdef double[:, ::1] m = np.ascontiguousarray(mat, dtype=np.float64)
    x_arr = np.array(start, dtype=np.float64)
    cdef double[::1] x = x_arr
    cdef Py_ssize_t n = m.shape[0]
    if m.shape[1] != n or x.shape[0] != n:
        raise ValueError("matrix must be square and match the start vector")
    y_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] y = y_arr
    cdef double norm = 0.0
    cdef double value, residual, acc, r
    cdef Py_ssize_t i, j
    cdef int iterations

    for i in range(n):
        norm += x[i] * x[i]
    norm = sqrt(norm)
    if norm == 0.0:
        raise ValueError("start vector must be nonzero")
    for i in range(n):
        x[i] /= norm

    for iterations in range(1, max_iter + 1):
        value = 0.0
        for i in range(n):
            acc = 0.0
            for j in range(n):
                acc += m[i, j] * x[j]
            y[i] = acc
            value += x[i] * acc
        residual = 0.0
        for i in range(n):
            r = fabs(y[i] - value * x[i])
            if r > residual:
                residual = r
        if residual <= tol or iterations == max_iter:
            return value, x_arr.copy(), residual, iterations, residual <= tol
        norm = 0.0
        for i in range(n):
            norm += y[i] * y[i]
        norm = sqrt(norm)
        if norm == 0.0:
            # x is in the kernel of mat; it is an exact eigenvector for 0.
            return 0.0, x_arr.copy(), 0.0, iterations, True
        for i in range(n):
            x[i] = y[i] / norm
    raise AssertionError("unreachable")


def jacobi_eigh(mat, double tol, int max_sweeps):
    """Full symmetric eigendecomposition by cyclic Jacobi rotations.

    Returns ``(values, vectors, sweeps, off)`` with eigenvalues ascending.
    """
    a_arr = np.array(mat, dtype=np.float64, order="C")
    cdef double[:, ::1] a = a_arr
    cdef Py_ssize_t n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("matrix must be square")
    v_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] v = v_arr
    cdef double off = _max_offdiag(a, n)
    cdef int sweeps = 0
    cdef double small, apq, tau, t, c, s, akp, akq
    cdef Py_ssize_t p, q, k

    small = tol / n if n > 0 else tol
    while off > tol and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= small:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[p, k]
                    akq = a[q, k]
                    a[p, k] = c * akp - s * akq
                    a[q, k] = s * akp + c * akq
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    akp = v[k, p]
                    akq = v[k, q]
                    v[k, p] = c * akp - s * akq
                    v[k, q] = s * akp + c * akq
        off = _max_offdiag(a, n)
    values = np.diagonal(a_arr).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v_arr[:, order], sweeps, off


cdef double _max_offdiag(double[:, ::1] a, Py_ssize_t n):
    cdef double best = 0.0
    cdef double r
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                r = fabs(a[i, j])
                if r > best:
                    best = r
    return best
