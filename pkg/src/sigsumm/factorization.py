"""Weighted nonnegative matrix factorization by multiplicative updates.

Given a nonnegative target A (m x n), an elementwise weight matrix W of the
same shape, and a rank r, find nonnegative U (m x r) and V (r x n)
minimizing

    f(U, V) = || W o (A - UV) ||_F^2 = sum_ij (w_ij (a_ij - (UV)_ij))^2

where o is the Hadamard product. Because each weight enters the objective
squared, the stationary conditions involve W o W; the multiplicative update
pair

    U <- U o [(W2 o A) V'] / [(W2 o (UV)) V' + s]
    V <- V o [U' (W2 o A)] / [U' (W2 o (UV)) + s]

with W2 = W o W and a small stabilizer s keeps iterates nonnegative and
never increases the objective. With W identically 1 this is exactly the
classic Euclidean-loss NMF update.

Factors are initialized from a seeded uniform draw on (0.1, 1.1): strictly
positive, so no entry is locked at zero by the multiplicative form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import InvalidRank, ShapeMismatch

DEFAULT_MAX_ITER = 300
DEFAULT_REL_TOL = 1e-5
DEFAULT_STABILIZER = 1e-12
DEFAULT_SEED = 42


@dataclass(frozen=True)
class FactorizationConfig:
    r: int
    max_iter: int = DEFAULT_MAX_ITER
    rel_tol: float = DEFAULT_REL_TOL
    seed: int = DEFAULT_SEED
    stabilizer: float = DEFAULT_STABILIZER

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InvalidRank(f"rank must be >= 1, got {self.r}")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.rel_tol <= 0 or self.stabilizer <= 0:
            raise ValueError("rel_tol and stabilizer must be positive")


@dataclass(frozen=True)
class FactorPair:
    """Converged factors plus the objective value after the initial draw and
    after every update sweep."""

    U: np.ndarray
    V: np.ndarray
    objective_trace: tuple[float, ...]
    converged: bool


def _dense(a) -> np.ndarray:
    if sparse.issparse(a):
        return a.toarray().astype(np.float64, copy=False)
    return np.asarray(a, dtype=np.float64)


def objective_value(A, W, U: np.ndarray, V: np.ndarray) -> float:
    """sum_ij (w_ij (a_ij - (UV)_ij))^2."""
    A = _dense(A)
    W = _dense(W)
    if A.shape != W.shape:
        raise ShapeMismatch(f"A is {A.shape}, W is {W.shape}")
    if U.shape[0] != A.shape[0] or V.shape[1] != A.shape[1] or U.shape[1] != V.shape[0]:
        raise ShapeMismatch(
            f"factors {U.shape} x {V.shape} do not conform to target {A.shape}"
        )
    residual = W * (A - U @ V)
    return float(np.sum(residual * residual))


def weighted_nmf(A, W, config: FactorizationConfig) -> FactorPair:
    """Minimize the weighted objective from a seeded start.

    Stops when the relative change of the objective between sweeps falls
    below config.rel_tol, or after config.max_iter sweeps. Deterministic:
    the same inputs and seed reproduce the factors bit for bit.
    """
    A = _dense(A)
    W = _dense(W)
    if A.shape != W.shape:
        raise ShapeMismatch(f"A is {A.shape}, W is {W.shape}")
    m, n = A.shape
    if not 1 <= config.r <= min(m, n):
        raise InvalidRank(f"rank {config.r} outside [1, {min(m, n)}] for a {m}x{n} target")

    rng = np.random.default_rng(config.seed)
    U = rng.uniform(0.1, 1.1, size=(m, config.r))
    V = rng.uniform(0.1, 1.1, size=(config.r, n))

    W2 = W * W
    W2A = W2 * A
    s = config.stabilizer

    trace = [objective_value(A, W, U, V)]
    converged = False
    for _ in range(config.max_iter):
        UV = U @ V
        U = U * (W2A @ V.T) / ((W2 * UV) @ V.T + s)
        UV = U @ V
        V = V * (U.T @ W2A) / (U.T @ (W2 * UV) + s)
        trace.append(objective_value(A, W, U, V))
        previous, current = trace[-2], trace[-1]
        if abs(previous - current) / max(previous, np.finfo(np.float64).tiny) < config.rel_tol:
            converged = True
            break
    return FactorPair(U=U, V=V, objective_trace=tuple(trace), converged=converged)


def standard_nmf(A, config: FactorizationConfig) -> FactorPair:
    """Unweighted NMF: the W = 1 case of weighted_nmf, same seed semantics."""
    A = _dense(A)
    return weighted_nmf(A, np.ones(A.shape), config)


def dump_factors(pair: FactorPair, prefix: str) -> None:
    """Debug dump of U, V and the objective trace as CSV files
    <prefix>_U.csv, <prefix>_V.csv, <prefix>_trace.csv."""
    np.savetxt(f"{prefix}_U.csv", pair.U, delimiter=",")
    np.savetxt(f"{prefix}_V.csv", pair.V, delimiter=",")
    np.savetxt(f"{prefix}_trace.csv", np.asarray(pair.objective_trace), delimiter=",")
