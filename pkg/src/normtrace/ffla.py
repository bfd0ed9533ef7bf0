"""Dense linear algebra over a :class:`~normtrace.gf.Field`.

Matrices are 2-D numpy int64 arrays of field elements.  Vectors act as row
vectors; a code is the row space of its generator matrix.
"""

from __future__ import annotations

import numpy as np

from normtrace.gf import Field


class SingularMatrixError(ValueError):
    pass


def as_matrix(M) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return M


def rref(field: Field, M) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form.

    Pivots are taken left to right; in each column the first nonzero row at
    or below the current pivot row is used.  Returns ``(R, rank, pivot_cols)``.
    """
    R = as_matrix(M).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    prow = 0
    for col in range(cols):
        if prow == rows:
            break
        nz = np.nonzero(R[prow:, col])[0]
        if nz.size == 0:
            continue
        found = prow + int(nz[0])
        if found != prow:
            R[[prow, found]] = R[[found, prow]]
        R[prow] = field.vmul(R[prow], field.inv(int(R[prow, col])))
        factors = R[:, col].copy()
        factors[prow] = 0
        if factors.any():
            R = field.vsub(R, field.vmul(factors[:, None], R[prow][None, :]))
        pivots.append(col)
        prow += 1
    return R, len(pivots), pivots


def rank(field: Field, M) -> int:
    return rref(field, M)[1]


def kernel_basis(field: Field, M) -> np.ndarray:
    """Rows spanning the right null space ``{v : M v^T = 0}``."""
    M = as_matrix(M)
    cols = M.shape[1]
    R, rk, pivots = rref(field, M)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for row, pc in enumerate(pivots):
            K[i, pc] = field.neg(int(R[row, f]))
    return K


def mat_mul(field: Field, A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        acc = field.vadd(acc, field.vmul(A[:, k, None], B[None, k, :]))
    return acc


def scale_cols(field: Field, A, v) -> np.ndarray:
    """Multiply column ``j`` of ``A`` by ``v[j]``."""
    A = as_matrix(A)
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (A.shape[1],):
        raise ValueError(f"scaling vector of length {v.shape} for {A.shape[1]} columns")
    return field.vmul(A, v[None, :])


def row_basis(field: Field, M) -> np.ndarray:
    """Nonzero rows of the rref: the canonical basis of the row space."""
    R, rk, _ = rref(field, M)
    return R[:rk]


def row_space_equal(field: Field, A, B) -> bool:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[1]:
        raise ValueError("matrices have different numbers of columns")
    return np.array_equal(row_basis(field, A), row_basis(field, B))


def row_space_intersection(field: Field, A, B) -> np.ndarray:
    """Basis of rowspace(A) ∩ rowspace(B), in rref."""
    A, B = row_basis(field, A), row_basis(field, B)
    if A.shape[1] != B.shape[1]:
        raise ValueError("matrices have different numbers of columns")
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, A.shape[1]), dtype=np.int64)
    # x A = y B  <=>  [x, y] [A; -B] = 0
    K = kernel_basis(field, np.vstack([A, field.vneg(B)]).T)
    return row_basis(field, mat_mul(field, K[:, : A.shape[0]], A))


def inverse(field: Field, M) -> np.ndarray:
    M = as_matrix(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, rk, _ = rref(field, np.hstack([M, np.eye(n, dtype=np.int64)]))
    if rk < n or not np.array_equal(R[:, :n], np.eye(n, dtype=np.int64)):
        raise SingularMatrixError("matrix is singular")
    return R[:, n:]
