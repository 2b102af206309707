"""Dense complex-matrix helpers sized for few-qubit work.

All functions operate on plain numpy arrays promoted to ``complex128``.
Working matrices are tiny (4x4 is the common case), so the code favors
clarity over performance throughout.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotSquare

#: Default numerical tolerance for every approximate comparison in the library.
DEFAULT_TOL = 1e-9


def as_matrix(a) -> np.ndarray:
    """Promote array-like input to a 2-d complex ndarray."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got ndim={m.ndim}")
    return m


def _require_square(a: np.ndarray, what: str) -> None:
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"{what} needs a square matrix, got shape {a.shape}")


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product; block (i, j) of the result is ``a[i, j] * b``."""
    return np.kron(as_matrix(a), as_matrix(b))


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    a = as_matrix(a)
    _require_square(a, "trace")
    return complex(np.trace(a))


def max_abs_diff(a, b) -> float:
    """Largest entrywise modulus of ``a - b``; the residual norm used throughout."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    return float(np.abs(a - b).max())


def partial_trace(rho, m: int, k: int, keep: str = "A") -> np.ndarray:
    """Trace out one factor of a bipartite operator on an (m*k)-dimensional space.

    The matrix is read as an m x m grid of k x k blocks B[i, j].  With
    ``keep="A"`` the result is the m x m matrix whose (i, j) entry is
    tr B[i, j]; with ``keep="B"`` it is the sum of the diagonal blocks,
    a k x k matrix.  Both reduce a product state to the kept tensor factor.
    """
    rho = as_matrix(rho)
    if m < 1 or k < 1:
        raise DimensionMismatch(f"factor dimensions must be positive, got m={m}, k={k}")
    n = m * k
    if rho.shape != (n, n):
        raise DimensionMismatch(
            f"expected a {n}x{n} matrix for factor dimensions ({m}, {k}), got {rho.shape}"
        )
    if keep not in ("A", "B"):
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    if keep == "A":
        out = np.empty((m, m), dtype=complex)
        for i in range(m):
            for j in range(m):
                out[i, j] = np.trace(rho[i * k:(i + 1) * k, j * k:(j + 1) * k])
        return out
    out = np.zeros((k, k), dtype=complex)
    for i in range(m):
        out += rho[i * k:(i + 1) * k, i * k:(i + 1) * k]
    return out


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    return float(np.abs(a - a.conj().T).max()) <= tol


def hermitian_eigenvalues(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Real spectrum of a Hermitian matrix, in ascending order.

    Rejects inputs whose Hermitian deviation exceeds ``tol``, since the
    symmetric eigensolver silently ignores half of a non-Hermitian matrix.
    """
    a = as_matrix(a)
    _require_square(a, "eigenvalue computation")
    dev = float(np.abs(a - a.conj().T).max())
    if dev > tol:
        raise NotHermitian(f"max |a - a^H| = {dev:.3e} exceeds tol = {tol:.1e}")
    return np.linalg.eigvalsh(a)
