"""Dense linear-algebra kernels with one shared numerical-rank rule.

Every rank decision in the package (Hankel ranks, reachability and
observability tests, factorizations, pseudoinverses) goes through the same
singular-value cutoff so that the modules agree on what counts as zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrix, NonFiniteEntry


@dataclass(frozen=True)
class ToleranceConfig:
    """Cutoff rule for treating singular values as zero.

    A singular value counts toward the rank iff it exceeds
    ``max(abs_floor, rel_eps * max(rows, cols) * sigma_max)``.
    """

    rel_eps: float = 1e-10
    abs_floor: float = 1e-300

    def __post_init__(self):
        if not self.rel_eps > 0:
            raise ValueError("rel_eps must be positive")
        if self.abs_floor < 0:
            raise ValueError("abs_floor must be nonnegative")

    def cutoff(self, singular_values, shape) -> float:
        smax = float(singular_values[0]) if len(singular_values) else 0.0
        return max(self.abs_floor, self.rel_eps * max(shape) * smax)


DEFAULT_TOL = ToleranceConfig()


def as_matrix(M) -> np.ndarray:
    """Coerce to a finite float64 2-d array, or raise InvalidMatrix."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2:
        raise InvalidMatrix(f"expected a 2-d array, got ndim={A.ndim}")
    if not np.all(np.isfinite(A)):
        raise NonFiniteEntry("matrix contains NaN or Inf entries")
    return A


def numerical_rank(M, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Number of singular values above the shared cutoff."""
    A = as_matrix(M)
    if min(A.shape) == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    return int(np.sum(s > tol.cutoff(s, A.shape)))


def pseudoinverse(M, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse via SVD with thresholded inversion."""
    A = as_matrix(M)
    if min(A.shape) == 0:
        return np.zeros((A.shape[1], A.shape[0]))
    U, s, Vt = np.linalg.svd(A, full_matrices=False)
    cut = tol.cutoff(s, A.shape)
    keep = s > cut
    inv = np.zeros_like(s)
    inv[keep] = 1.0 / s[keep]
    return (Vt.T * inv) @ U.T


def rank_factorize(M, tol: ToleranceConfig = DEFAULT_TOL):
    """Full-rank factorization ``M = O @ R`` with balanced SVD factors.

    Returns ``(O, R, r)`` where ``r`` is the numerical rank, ``O`` is
    rows x r and ``R`` is r x cols, both of full rank r, built as
    ``O = U sqrt(S)`` and ``R = sqrt(S) V^T`` from the truncated SVD.
    """
    A = as_matrix(M)
    if min(A.shape) == 0:
        return np.zeros((A.shape[0], 0)), np.zeros((0, A.shape[1])), 0
    U, s, Vt = np.linalg.svd(A, full_matrices=False)
    r = int(np.sum(s > tol.cutoff(s, A.shape)))
    root = np.sqrt(s[:r])
    return U[:, :r] * root, root[:, None] * Vt[:r, :], r


def range_basis(M, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal columns spanning the column space of M."""
    A = as_matrix(M)
    if min(A.shape) == 0:
        return np.zeros((A.shape[0], 0))
    U, s, _ = np.linalg.svd(A, full_matrices=False)
    r = int(np.sum(s > tol.cutoff(s, A.shape)))
    return U[:, :r]


def row_basis(M, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal rows spanning the row space of M."""
    A = as_matrix(M)
    if min(A.shape) == 0:
        return np.zeros((0, A.shape[1]))
    _, s, Vt = np.linalg.svd(A, full_matrices=False)
    r = int(np.sum(s > tol.cutoff(s, A.shape)))
    return Vt[:r, :]
