"""The two kernel backends: correctness and mutual agreement."""

import numpy as np
import pytest

from specgap import _kernels_py

try:
    from specgap import _kernels

    BACKENDS = [("python", _kernels_py), ("compiled", _kernels)]
except ImportError:  # extension not built; fallback-only environment
    _kernels = None
    BACKENDS = [("python", _kernels_py)]

IDS = [name for name, _ in BACKENDS]
MODULES = [mod for _, mod in BACKENDS]


def random_symmetric(rng, n):
    a = rng.standard_normal((n, n))
    return (a + a.T) / 2.0


@pytest.mark.parametrize("kernels", MODULES, ids=IDS)
class TestPowerIteration:
    def test_rank_one(self, kernels):
        mat = np.ones((2, 2))
        value, vec, residual, iters, ok = kernels.power_iteration(
            mat, np.array([2.0, 2.0]), 1e-12, 1000
        )
        assert ok
        assert value == pytest.approx(2.0, abs=1e-12)
        assert vec == pytest.approx([np.sqrt(0.5), np.sqrt(0.5)], abs=1e-9)
        assert residual <= 1e-12

    def test_diagonal(self, kernels):
        mat = np.diag([1.0, 5.0, 3.0])
        value, vec, residual, iters, ok = kernels.power_iteration(
            mat, np.array([1.0, 1.0, 1.0]), 1e-12, 10_000
        )
        assert ok and value == pytest.approx(5.0, abs=1e-9)
        assert abs(vec[1]) == pytest.approx(1.0, abs=1e-6)

    def test_unit_vector_and_residual_definition(self, kernels):
        rng = np.random.default_rng(7)
        mat = np.abs(random_symmetric(rng, 12)) + np.diag(np.full(12, 3.0))
        value, vec, residual, iters, ok = kernels.power_iteration(
            mat, np.ones(12), 1e-10, 100_000
        )
        assert ok
        assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)
        assert np.max(np.abs(mat @ vec - value * vec)) == pytest.approx(
            residual, abs=1e-14
        )

    def test_iteration_cap_reports_failure(self, kernels):
        mat = np.diag([1.0, 1.000001])
        value, vec, residual, iters, ok = kernels.power_iteration(
            mat, np.array([1.0, 1.0]), 1e-14, 3
        )
        assert not ok and iters == 3

    def test_zero_start_rejected(self, kernels):
        with pytest.raises(ValueError):
            kernels.power_iteration(np.eye(2), np.zeros(2), 1e-10, 10)

    def test_kernel_vector_converges_as_zero_eigenpair(self, kernels):
        mat = np.array([[1.0, -1.0], [-1.0, 1.0]])
        value, vec, residual, iters, ok = kernels.power_iteration(
            mat, np.array([1.0, 1.0]), 1e-10, 50
        )
        assert ok and value == 0.0


@pytest.mark.parametrize("kernels", MODULES, ids=IDS)
class TestJacobi:
    def test_diagonal_is_fixed_point(self, kernels):
        values, vectors, sweeps, off = kernels.jacobi_eigh(
            np.diag([3.0, 1.0, 2.0]), 1e-12, 50
        )
        assert values.tolist() == [1.0, 2.0, 3.0]
        assert off == 0.0

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 21, 30])
    def test_matches_lapack(self, kernels, n):
        rng = np.random.default_rng(n)
        mat = random_symmetric(rng, n)
        values, vectors, sweeps, off = kernels.jacobi_eigh(mat, 1e-12, 60)
        assert off <= 1e-12
        assert values == pytest.approx(np.linalg.eigvalsh(mat), abs=1e-9)
        # Eigenvector columns: orthonormal and satisfying M v = lambda v.
        assert vectors.T @ vectors == pytest.approx(np.eye(n), abs=1e-10)
        for i in range(n):
            assert mat @ vectors[:, i] == pytest.approx(
                values[i] * vectors[:, i], abs=1e-9
            )

    def test_values_ascending(self, kernels):
        rng = np.random.default_rng(99)
        mat = random_symmetric(rng, 10)
        values, *_ = kernels.jacobi_eigh(mat, 1e-12, 60)
        assert np.all(np.diff(values) >= 0)


@pytest.mark.skipif(_kernels is None, reason="compiled extension not built")
class TestBackendAgreement:
    def test_power_iteration_agrees(self):
        rng = np.random.default_rng(42)
        for n in (2, 5, 11, 24):
            mat = np.abs(random_symmetric(rng, n)) + np.diag(np.full(n, 2.0))
            start = np.diagonal(mat) + 1.0
            v_py = _kernels_py.power_iteration(mat, start, 1e-11, 100_000)
            v_c = _kernels.power_iteration(mat, start, 1e-11, 100_000)
            assert v_py[4] and v_c[4]
            assert v_c[0] == pytest.approx(v_py[0], abs=1e-10)

    def test_jacobi_agrees(self):
        rng = np.random.default_rng(43)
        for n in (2, 6, 17):
            mat = random_symmetric(rng, n)
            vals_py, _, _, off_py = _kernels_py.jacobi_eigh(mat, 1e-12, 60)
            vals_c, _, _, off_c = _kernels.jacobi_eigh(mat, 1e-12, 60)
            assert off_py <= 1e-12 and off_c <= 1e-12
            assert vals_c == pytest.approx(vals_py, abs=1e-11)
