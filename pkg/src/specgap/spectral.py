"""Spectral radii of graph matrices.

Builds the adjacency matrix A, Laplacian L = D - A and signless Laplacian
Q = D + A as dense symmetric arrays, and computes their largest eigenvalues
with power iteration (Rayleigh-quotient estimates, residual-controlled).  A
cyclic-Jacobi eigendecomposition serves as the independent dense oracle and
as the fallback when iteration does not converge.

Start vectors are deterministic.  For entrywise-nonnegative matrices the
start is ``diag + 1`` (strictly positive, so the overlap with the Perron
vector is guaranteed and convergence to the Perron root follows).  Matrices
with negative entries get an additional fixed hash-derived jitter: for
Laplacians of graphs with symmetries, any start that is an affine function
of degree and vertex index can be *exactly* orthogonal to the dominant
eigenvector (constant vectors on regular graphs, reversal-antisymmetric
vectors on even paths, parity characters on hypercubes), which would make
the iteration converge to a smaller eigenvalue with a perfectly good
residual.  The jitter has no alignment with any such structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import jacobi_eigh, power_iteration
from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    connected_components,
    induced_subgraph,
    is_connected,
)

DEFAULT_TOL = 1e-10
ITERATION_CAP = 200_000

_ORACLE_TOL = 1e-12
_ORACLE_MAX_SWEEPS = 60
_ORACLE_MAX_ORDER = 2000


class NumericalError(RuntimeError):
    """Both the iterative solver and the dense fallback failed (not expected)."""


@dataclass(frozen=True)
class SpectralResult:
    """Largest-eigenvalue estimate with its certificate quantities.

    Attributes:
        value: eigenvalue estimate.
        vector: unit eigenvector estimate (Euclidean norm 1).
        residual: ``max|M x - value * x|`` at the returned pair.
        iterations: power-iteration steps spent (also counted when the
            dense fallback ended up producing the result).
        fallback: True when the dense eigendecomposition supplied the result.
    """

    value: float
    vector: np.ndarray = field(repr=False)
    residual: float
    iterations: int
    fallback: bool = False

    @property
    def max_vertex(self) -> int:
        """Index of the largest eigenvector entry."""
        return int(np.argmax(self.vector))


def adjacency(g: Graph) -> np.ndarray:
    """Adjacency matrix A as a dense float array."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    """Laplacian L = D - A."""
    a = adjacency(g)
    return np.diag(a.sum(axis=1)) - a


def signless_laplacian(g: Graph) -> np.ndarray:
    """Signless Laplacian Q = D + A."""
    a = adjacency(g)
    return np.diag(a.sum(axis=1)) + a


def _require_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.ascontiguousarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix must be exactly symmetric")
    return m


def _hash_jitter(n: int) -> np.ndarray:
    """Deterministic per-index values in [0, 1) from a splitmix64 hash."""
    mask = (1 << 64) - 1
    out = np.empty(n)
    for i in range(n):
        z = (i + 0x9E3779B97F4A7C15) & mask
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        z ^= z >> 31
        out[i] = z / 2.0**64
    return out


def default_start(m: np.ndarray) -> np.ndarray:
    """The deterministic start vector for power iteration on ``m``."""
    start = np.diagonal(m) + 1.0
    if float(np.min(m)) < 0.0:
        start = start + _hash_jitter(m.shape[0])
    return start


def largest_eigenvalue(
    m: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = ITERATION_CAP,
    start: np.ndarray | None = None,
) -> SpectralResult:
    """Largest eigenvalue of a symmetric matrix, iterative with dense fallback.

    For entrywise-nonnegative input with a connected support the result is
    the Perron root with a positive eigenvector.  Non-convergence within
    ``max_iter`` falls back to the Jacobi oracle and sets ``fallback``.
    """
    m = _require_symmetric(m)
    if m.shape[0] == 0:
        raise ValueError("an empty matrix has no eigenvalues")
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if start is None:
        start = default_start(m)
    value, vector, residual, iterations, converged = power_iteration(
        m, start, tol, max_iter
    )
    if converged:
        return SpectralResult(float(value), vector, float(residual), int(iterations))
    return _oracle_largest(m, iterations)


def _oracle_largest(m: np.ndarray, iterations_spent: int = 0) -> SpectralResult:
    """Dominant eigenpair via the dense Jacobi oracle (used as fallback)."""
    values, vectors, _sweeps, off = jacobi_eigh(m, _ORACLE_TOL, _ORACLE_MAX_SWEEPS)
    if off > _ORACLE_TOL:
        raise NumericalError(
            f"Jacobi sweeps stalled at off-diagonal norm {off:.3e}"
        )
    # Power iteration targets the eigenvalue of largest modulus; break exact
    # ties toward the algebraically largest one.
    idx = -1 if abs(values[-1]) >= abs(values[0]) else 0
    vector = np.array(vectors[:, idx])
    vector /= float(np.linalg.norm(vector))
    if vector[int(np.argmax(np.abs(vector)))] < 0.0:
        vector = -vector
    value = float(values[idx])
    residual = float(np.max(np.abs(m @ vector - value * vector)))
    return SpectralResult(value, vector, residual, iterations_spent, fallback=True)


def _component_radius(g: Graph, build, tol: float, certify_floor=None) -> float:
    """Max over components of the largest eigenvalue of ``build(component)``."""
    best = 0.0
    for comp in connected_components(g):
        if len(comp) == 1:
            continue  # isolated vertex: A, L and Q are all [[0]]
        sub = induced_subgraph(g, comp)
        mat = build(sub)
        result = largest_eigenvalue(mat, tol)
        if certify_floor is not None and not result.fallback:
            floor = certify_floor(sub)
            if result.value < floor - 1e-9:
                # The iterate converged to a non-dominant eigenpair; the
                # dense route is immune to start-vector degeneracies.
                result = _oracle_largest(mat, result.iterations)
        best = max(best, result.value)
    return best


def q_max(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Signless Laplacian spectral radius; max over components, 0 if edgeless."""
    return _component_radius(g, signless_laplacian, tol)


def mu_max(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Laplacian spectral radius; max over components, 0 if edgeless.

    A converged value below the max_degree + 1 floor (valid for any graph
    with an edge) proves the iteration locked onto a lesser eigenpair, in
    which case the dense oracle supplies the value instead.
    """
    return _component_radius(
        g, laplacian, tol, certify_floor=lambda sub: sub.max_degree() + 1.0
    )


def rho_max(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Adjacency spectral radius; max over components, 0 if edgeless."""
    best = 0.0
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        sub = induced_subgraph(g, comp)
        # Shift by the component max degree: A + shift*I is entrywise
        # nonnegative with positive diagonal, so the iteration converges to
        # its Perron root rho + shift without sign oscillation (bipartite A
        # has the +/-rho eigenvalue pair, on which unshifted iteration stalls).
        shift = float(sub.max_degree())
        mat = adjacency(sub) + shift * np.eye(sub.n)
        result = largest_eigenvalue(mat, tol)
        best = max(best, result.value - shift)
    return best


def perron_vector(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Positive unit eigenvector of Q for a connected graph.

    The returned result's ``max_vertex`` is the vertex carrying the largest
    eigenvector entry.  Disconnected input is rejected: the positive
    eigenvector is only unique on a connected graph.
    """
    if g.n == 0:
        raise GraphError("Perron vector needs at least one vertex")
    if not is_connected(g):
        raise DisconnectedGraphError("Perron vector requires a connected graph")
    if g.n == 1:
        return SpectralResult(0.0, np.ones(1), 0.0, 0)
    result = largest_eigenvalue(signless_laplacian(g), tol)
    vector = result.vector if float(result.vector.sum()) >= 0.0 else -result.vector
    if float(np.min(vector)) <= 0.0:
        raise NumericalError("Perron vector came out non-positive")
    if vector is not result.vector:
        result = SpectralResult(
            result.value, vector, result.residual, result.iterations, result.fallback
        )
    return result


def dense_spectrum_oracle(m: np.ndarray) -> np.ndarray:
    """Full spectrum, ascending, by cyclic Jacobi rotations.

    Independent of the power-iteration route; intended for cross-validation
    and kept to moderate orders.
    """
    m = _require_symmetric(m)
    if m.shape[0] > _ORACLE_MAX_ORDER:
        raise ValueError(
            f"oracle is limited to order {_ORACLE_MAX_ORDER}, got {m.shape[0]}"
        )
    values, _vectors, _sweeps, off = jacobi_eigh(m, _ORACLE_TOL, _ORACLE_MAX_SWEEPS)
    if off > _ORACLE_TOL:
        raise NumericalError(f"Jacobi sweeps stalled at off-diagonal norm {off:.3e}")
    return values
