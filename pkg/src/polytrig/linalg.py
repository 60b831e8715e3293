"""Small dense complex matrix kernel: LU determinant/solve and left eigenpairs.

Sized for dimensions up to 24; matrices are numpy arrays of dtype complex.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import Polynomial, find_roots

MAX_DIM = 24


class LinalgError(ValueError):
    pass


class SingularMatrixError(LinalgError):
    """Pivot below the working-precision threshold; carries the pivot index."""

    def __init__(self, pivot_index: int):
        super().__init__(f"matrix is singular to working precision (pivot {pivot_index})")
        self.pivot_index = pivot_index


def _as_matrix(M) -> np.ndarray:
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise LinalgError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A.view(float))):
        raise LinalgError("matrix has non-finite entries")
    return A


def norm1(M) -> float:
    """Maximum absolute column sum."""
    A = np.asarray(M, dtype=complex)
    return float(np.max(np.sum(np.abs(A), axis=0)))


def _lu(M: np.ndarray):
    """In-place LU with partial pivoting by modulus; returns (LU, perm, sign)."""
    A = M.copy()
    n = A.shape[0]
    perm = list(range(n))
    sign = 1
    for k in range(n):
        p = int(np.argmax(np.abs(A[k:, k]))) + k
        if p != k:
            A[[k, p]] = A[[p, k]]
            perm[k], perm[p] = perm[p], perm[k]
            sign = -sign
        pivot = A[k, k]
        if pivot == 0:
            continue
        A[k + 1:, k] /= pivot
        A[k + 1:, k + 1:] -= np.outer(A[k + 1:, k], A[k, k + 1:])
    return A, perm, sign


def determinant(M) -> complex:
    """Determinant via LU with partial pivoting; singular matrices give ~0."""
    A = _as_matrix(M)
    lu, _, sign = _lu(A)
    return complex(sign * np.prod(np.diag(lu)))


def _lu_solve(lu: np.ndarray, perm, b: np.ndarray) -> np.ndarray:
    n = lu.shape[0]
    x = np.asarray(b, dtype=complex)[perm].copy()
    for k in range(1, n):
        x[k] -= lu[k, :k] @ x[:k]
    for k in range(n - 1, -1, -1):
        x[k] = (x[k] - lu[k, k + 1:] @ x[k + 1:]) / lu[k, k]
    return x


def solve(M, b, pivot_rtol: float = 1e-13):
    """Solve ``M x = b``; returns ``(x, condition_estimate)``.

    The condition estimate is ``norm1(M) * norm1(inv(M))`` with the inverse
    recovered column by column from the same factorization.  Raises
    :class:`SingularMatrixError` when a pivot falls below
    ``pivot_rtol * norm1(M)``.
    """
    A = _as_matrix(M)
    vec = np.asarray(b, dtype=complex)
    if vec.shape != (A.shape[0],):
        raise LinalgError("right-hand side length does not match the matrix")
    lu, perm, _ = _lu(A)
    threshold = pivot_rtol * max(norm1(A), np.finfo(float).tiny)
    for k in range(A.shape[0]):
        if abs(lu[k, k]) < threshold:
            raise SingularMatrixError(k)
    x = _lu_solve(lu, perm, vec)
    inv_norm = 0.0
    eye = np.eye(A.shape[0], dtype=complex)
    for j in range(A.shape[0]):
        col = _lu_solve(lu, perm, eye[:, j])
        inv_norm = max(inv_norm, float(np.sum(np.abs(col))))
    return x, norm1(A) * inv_norm


def condition_number(M, pivot_rtol: float = 1e-13) -> float:
    """One-norm condition estimate; infinity when the solve refuses the matrix."""
    A = _as_matrix(M)
    try:
        _, cond = solve(A, np.zeros(A.shape[0], dtype=complex), pivot_rtol)
    except SingularMatrixError:
        return float("inf")
    return cond


def characteristic_polynomial(M) -> Polynomial:
    """Monic characteristic polynomial by the Faddeev-LeVerrier trace recursion."""
    A = _as_matrix(M)
    n = A.shape[0]
    coeffs = [0j] * (n + 1)
    coeffs[n] = 1 + 0j
    Mk = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        N = A @ Mk
        ck = -np.trace(N) / k
        coeffs[n - k] = complex(ck)
        Mk = N + ck * np.eye(n, dtype=complex)
    return Polynomial(tuple(coeffs))


@dataclass(frozen=True)
class Eigenpair:
    value: complex
    left_vector: np.ndarray  # L with L @ M == value * L
    residual: float


def _normalize_left(v: np.ndarray) -> np.ndarray:
    idx = int(np.argmax(np.abs(v)))  # ties resolve to the lowest index
    return v / v[idx]


def _inverse_iteration(A: np.ndarray, lam: complex) -> np.ndarray:
    """Left null-ish vector of ``A - lam I`` via shifted inverse iteration."""
    n = A.shape[0]
    scale = norm1(A) + abs(lam) + 1.0
    x = np.array([1.0 + 0.01 * j for j in range(n)], dtype=complex)
    shift = 1e-13 * scale
    for _ in range(8):
        B = A.T - (lam + shift) * np.eye(n, dtype=complex)
        lu, perm, _ = _lu(B)
        if np.min(np.abs(np.diag(lu))) == 0:
            shift = shift * 100 if shift else 1e-13 * scale
            continue
        y = x
        for _ in range(4):
            y = _lu_solve(lu, perm, y)
            y = y / np.max(np.abs(y))
        return _normalize_left(y)
    return _normalize_left(x)


def eigenpairs(M) -> list:
    """Eigenvalues with left eigenvectors, in lexicographic eigenvalue order.

    Eigenvalues come from the characteristic polynomial and the shared root
    finder; each left eigenvector is normalized so its maximum-modulus entry
    equals 1.  Defective matrices are not special-cased: the reported residual
    ``max|L M - lam L|`` is the quality statement.
    """
    A = _as_matrix(M)
    n = A.shape[0]
    if n > MAX_DIM:
        raise LinalgError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")

    mean = complex(np.trace(A) / n)
    if norm1(A - mean * np.eye(n, dtype=complex)) <= 1e-12 * (norm1(A) + 1.0):
        # scalar matrix: every vector is an eigenvector; use the canonical basis
        out = []
        for j in range(n):
            v = np.zeros(n, dtype=complex)
            v[j] = 1.0
            out.append(Eigenpair(mean, v, float(norm1(A - mean * np.eye(n, dtype=complex)))))
        return out

    charpoly = characteristic_polynomial(A)
    roots = find_roots(charpoly)
    out = []
    for lam in roots:
        v = _inverse_iteration(A, lam)
        residual = float(np.max(np.abs(v @ A - lam * v)))
        out.append(Eigenpair(complex(lam), v, residual))
    return out
