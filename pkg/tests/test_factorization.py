"""Factorization correctness: hand oracles for the objective, monotone
descent of the multiplicative updates, determinism, and agreement with an
independent alternating-NNLS solver on the unweighted case."""

from __future__ import annotations

import numpy as np
import pytest
from scipy.optimize import nnls

from sigsumm.errors import InvalidRank, ShapeMismatch
from sigsumm.factorization import (
    FactorizationConfig,
    objective_value,
    standard_nmf,
    weighted_nmf,
)


def random_instance(rng, max_dim=30, max_rank=5):
    m = int(rng.integers(2, max_dim + 1))
    n = int(rng.integers(2, max_dim + 1))
    r = int(rng.integers(1, min(m, n, max_rank) + 1))
    A = (rng.random((m, n)) < 0.4).astype(float)
    W = np.exp(rng.uniform(-5, 5, size=(m, n)))
    return A, W, r


class TestObjective:
    def test_exact_factors_zero(self):
        rng = np.random.default_rng(0)
        U = rng.random((4, 2))
        V = rng.random((2, 3))
        A = U @ V
        W = rng.random((4, 3)) + 0.5
        assert objective_value(A, W, U, V) == pytest.approx(0.0, abs=1e-20)

    def test_zero_weights_mask_everything(self):
        A = np.array([[1.0, 0.0], [0.0, 1.0]])
        U = np.array([[5.0], [7.0]])
        V = np.array([[2.0, 3.0]])
        assert objective_value(A, np.zeros((2, 2)), U, V) == 0.0

    def test_matches_scalar_loop(self):
        rng = np.random.default_rng(1)
        A = rng.random((2, 2))
        W = rng.random((2, 2))
        U = rng.random((2, 2))
        V = rng.random((2, 2))
        UV = U @ V
        expected = sum(
            (W[i, j] * (A[i, j] - UV[i, j])) ** 2 for i in range(2) for j in range(2)
        )
        assert objective_value(A, W, U, V) == pytest.approx(expected, rel=1e-12)

    def test_shape_mismatch_rejected(self):
        A = np.ones((3, 2))
        with pytest.raises(ShapeMismatch):
            objective_value(A, np.ones((2, 3)), np.ones((3, 1)), np.ones((1, 2)))
        with pytest.raises(ShapeMismatch):
            objective_value(A, np.ones((3, 2)), np.ones((3, 2)), np.ones((1, 2)))


class TestWeightedNmf:
    def test_rank_one_exact_recovery(self):
        u = np.array([1.0, 2.0, 0.5])
        v = np.array([0.5, 1.0, 1.5, 2.0])
        A = np.outer(u, v)
        pair = weighted_nmf(A, np.ones_like(A), FactorizationConfig(r=1, max_iter=2000, rel_tol=1e-12))
        assert pair.objective_trace[-1] < 1e-6

    def test_deterministic_bit_identical(self):
        rng = np.random.default_rng(2)
        A = (rng.random((8, 6)) < 0.5).astype(float)
        W = np.exp(rng.uniform(-1, 1, size=(8, 6)))
        cfg = FactorizationConfig(r=3)
        p1 = weighted_nmf(A, W, cfg)
        p2 = weighted_nmf(A, W, cfg)
        assert p1.U.tobytes() == p2.U.tobytes()
        assert p1.V.tobytes() == p2.V.tobytes()
        assert p1.objective_trace == p2.objective_trace

    def test_objective_monotone_over_trials(self):
        rng = np.random.default_rng(42)
        for trial in range(50):
            A, W, r = random_instance(rng)
            cfg = FactorizationConfig(r=r, max_iter=80, seed=int(rng.integers(0, 2**31)))
            pair = weighted_nmf(A, W, cfg)
            trace = np.array(pair.objective_trace)
            assert np.all(np.diff(trace) <= 1e-9), f"trial {trial} increased"

    def test_factors_nonnegative(self):
        rng = np.random.default_rng(3)
        A, W, r = random_instance(rng, max_dim=12)
        pair = weighted_nmf(A, W, FactorizationConfig(r=r))
        assert np.all(pair.U >= 0) and np.all(pair.V >= 0)

    def test_invalid_rank_rejected(self):
        A = np.ones((3, 4))
        with pytest.raises(InvalidRank):
            weighted_nmf(A, np.ones_like(A), FactorizationConfig(r=4))
        with pytest.raises(InvalidRank):
            FactorizationConfig(r=0)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ShapeMismatch):
            weighted_nmf(np.ones((3, 4)), np.ones((4, 3)), FactorizationConfig(r=2))

    def test_uniform_weight_scaling_matches_unweighted(self):
        # W = c * ones rescales numerator and denominator alike, so the
        # iterates coincide with the unweighted run up to stabilizer noise.
        rng = np.random.default_rng(4)
        A = (rng.random((10, 7)) < 0.5).astype(float)
        cfg = FactorizationConfig(r=2, max_iter=50)
        scaled = weighted_nmf(A, np.full_like(A, 3.0), cfg)
        plain = standard_nmf(A, cfg)
        assert np.allclose(scaled.U, plain.U, rtol=1e-8, atol=1e-10)
        assert np.allclose(scaled.V, plain.V, rtol=1e-8, atol=1e-10)

    def test_near_zero_weight_masks_cell(self):
        rng = np.random.default_rng(5)
        A = (rng.random((6, 6)) < 0.5).astype(float)
        W = np.ones_like(A)
        W[2, 3] = 1e-12
        cfg = FactorizationConfig(r=2, max_iter=200)
        base = weighted_nmf(A, W, cfg)
        flipped = A.copy()
        flipped[2, 3] = 1.0 - flipped[2, 3]
        other = weighted_nmf(flipped, W, cfg)
        assert abs(base.objective_trace[-1] - other.objective_trace[-1]) < 1e-6


def anls_oracle(A: np.ndarray, r: int, seed: int, sweeps: int = 400) -> float:
    """Independent unweighted NMF by alternating nonnegative least squares,
    started from the same seeded draw as the implementation."""
    m, n = A.shape
    rng = np.random.default_rng(seed)
    U = rng.uniform(0.1, 1.1, size=(m, r))
    V = rng.uniform(0.1, 1.1, size=(r, n))
    last = np.inf
    for _ in range(sweeps):
        for j in range(n):
            V[:, j] = nnls(U, A[:, j])[0]
        for i in range(m):
            U[i, :] = nnls(V.T, A[i, :])[0]
        obj = float(np.sum((A - U @ V) ** 2))
        if last - obj < 1e-12:
            break
        last = obj
    return float(np.sum((A - U @ V) ** 2))


class TestStandardNmf:
    def test_equals_weighted_with_ones(self):
        rng = np.random.default_rng(6)
        A = (rng.random((6, 5)) < 0.5).astype(float)
        cfg = FactorizationConfig(r=2)
        a = standard_nmf(A, cfg)
        b = weighted_nmf(A, np.ones_like(A), cfg)
        assert a.U.tobytes() == b.U.tobytes()
        assert a.V.tobytes() == b.V.tobytes()

    def test_full_rank_identity_fit(self):
        A = np.eye(3)
        pair = standard_nmf(A, FactorizationConfig(r=3, max_iter=5000, rel_tol=1e-14))
        assert pair.objective_trace[-1] < 1e-6

    def test_trace_non_increasing_over_trials(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            m = int(rng.integers(3, 15))
            n = int(rng.integers(3, 15))
            r = int(rng.integers(1, min(m, n, 4) + 1))
            A = (rng.random((m, n)) < 0.5).astype(float)
            pair = standard_nmf(A, FactorizationConfig(r=r, max_iter=60))
            assert np.all(np.diff(pair.objective_trace) <= 1e-9)

    def test_matches_anls_oracle_within_five_percent(self):
        rng = np.random.default_rng(8)
        A = (rng.random((6, 6)) < 0.5).astype(float)
        seed = 42
        mine = standard_nmf(A, FactorizationConfig(r=2, max_iter=3000, rel_tol=1e-12, seed=seed))
        oracle = anls_oracle(A, r=2, seed=seed)
        assert mine.objective_trace[-1] == pytest.approx(oracle, rel=0.05)

    def test_converged_flag_set_on_easy_instance(self):
        A = np.eye(2)
        pair = standard_nmf(A, FactorizationConfig(r=2, max_iter=5000, rel_tol=1e-8))
        assert pair.converged
