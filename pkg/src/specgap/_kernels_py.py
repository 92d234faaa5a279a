"""NumPy implementations of the dense symmetric eigenvalue kernels.

This module is the fallback backend: `specgap._kernels` (a compiled
extension) provides the same two functions with identical signatures and
semantics, and `specgap._backend` picks whichever is importable.  Keep the
two implementations in lock-step; `tests/test_kernels.py` cross-checks them.

Both kernels are deliberately self-contained (no LAPACK eigensolvers) so the
two routes stay independent: power iteration is the production path, cyclic
Jacobi is the slow dense oracle it is checked against.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["power_iteration", "jacobi_eigh"]


def power_iteration(
    mat: np.ndarray,
    start: np.ndarray,
    tol: float,
    max_iter: int,
) -> tuple[float, np.ndarray, float, int, bool]:
    """Dominant eigenpair of a symmetric matrix by power iteration.

    The eigenvalue estimate is the Rayleigh quotient ``x.T @ M @ x`` of the
    current unit iterate ``x``; convergence is declared when the residual
    ``max|M x - lambda x|`` drops to ``tol``.

    Returns ``(value, vector, residual, iterations, converged)`` where
    ``vector`` is the unit iterate the returned value/residual belong to.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    x = np.array(start, dtype=np.float64)
    norm = float(np.linalg.norm(x))
    if norm == 0.0:
        raise ValueError("start vector must be nonzero")
    x /= norm
    for iterations in range(1, max_iter + 1):
        y = mat @ x
        value = float(x @ y)
        residual = float(np.max(np.abs(y - value * x)))
        if residual <= tol or iterations == max_iter:
            return value, x, residual, iterations, residual <= tol
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            # x is in the kernel of mat; it is an exact eigenvector for 0.
            return 0.0, x, 0.0, iterations, True
        x = y / norm
    raise AssertionError("unreachable")


def jacobi_eigh(
    mat: np.ndarray,
    tol: float,
    max_sweeps: int,
) -> tuple[np.ndarray, np.ndarray, int, float]:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps Givens rotations over the strict upper triangle until the largest
    off-diagonal magnitude is at most ``tol``.  Returns
    ``(values, vectors, sweeps, off)`` with eigenvalues ascending and
    eigenvectors in the matching columns.
    """
    a = np.array(mat, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    off = _max_offdiag(a)
    sweeps = 0
    while off > tol and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol / max(n, 1):
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        off = _max_offdiag(a)
    values = np.diagonal(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order], sweeps, off


def _max_offdiag(a: np.ndarray) -> float:
    n = a.shape[0]
    if n < 2:
        return 0.0
    mask = ~np.eye(n, dtype=bool)
    return float(np.max(np.abs(a[mask])))
